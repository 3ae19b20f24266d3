#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "remezlab/intervals.hpp"
#include "remezlab/trigpoly.hpp"

namespace remezlab {

// One statement-level check: both sides of an inequality as evaluated, the
// verdict on the stated direction, and enough inputs to reproduce the row.
struct AuditReport {
  std::string claim_id;
  std::vector<std::pair<std::string, double>> inputs;
  bool has_seed = false;
  std::uint64_t seed = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds_as_stated = false;
  double margin = 0.0;  // rhs - lhs (log-domain rows note the change of scale)
  std::string notes;
};

// Draws a near-tight member of T_n^c(s): seeded complex-normal coefficients
// symmetrized for the requested parity, rescaled by the smallest lambda with
// deficiency(Q/lambda) <= s (64-step bisection on the scaling monotonicity).
TrigPoly random_member(int n, double s, Parity parity, std::uint64_t seed);

// As random_member, optionally restricted to real-valued polynomials.
TrigPoly random_member_real(int n, double s, Parity parity, bool real_coeffs, std::uint64_t seed);

// sup |Q| vs T_{2n}(sec(s/4)) for an even member.
AuditReport audit_theorem_2_1(const TrigPoly& q, double s);

// sup |Q| vs the odd bound, plus the proof-chain check that R = 2|Q|^2 - 1 is
// even, real, of degree 2n, and deficiency-preserving.
AuditReport audit_theorem_2_2(const TrigPoly& q, double s);

// sup |R| vs T_{2n}(sec(s/2)) for any member, s in (0, pi).
AuditReport audit_theorem_2_3(const TrigPoly& r, double s);

// |Q(0)| vs T_{2n}(sec(s/4)); claim id Lem3.1 for real-valued input, Lem3.2
// otherwise.
AuditReport audit_lemma_3_1_or_3_2(const TrigPoly& q, double s);

// Algebraic-side endpoint bounds. The hypothesis measure is evaluated
// independently through alg_sublevel + cheb_measure and converted to an
// effective s; at_lower checks the starred (left endpoint) variants.
// Claim ids Lem3.3 / Lem3.3* on [-1,1], Lem3.4 / Lem3.4* on general [a,b].
AuditReport audit_lemma_3_3_or_3_4(const TrigPoly& q_even, double a, double b, bool at_lower);

enum class MeasureLemma {
  Lemma35,           // A within [1-2r, 1], lower host [1-2r, 1]
  Lemma36,           // A within [-1, 1-2r], host [-1, 1-2r] (the reading used in the main proof)
  Lemma36Displayed,  // A within [-1, -1+2r] as displayed; ill-posed for r > 1/2
};

AuditReport audit_lemma_3_5_or_3_6(double r, const LineIntervalSet& a_set, MeasureLemma which);

// Both displayed inequalities of the arccos lemma, each evaluated in the
// stated direction and the reverse; ids Lem3.7a and Lem3.7b.
std::pair<AuditReport, AuditReport> audit_lemma_3_7(double r);

struct SweepConfig {
  std::uint64_t seed = 20180907;
  int samples = 100;  // per claim
  int n_min = 1;
  int n_max = 6;
  double s_min = 0.3;
  double s_max = 5.9;                   // clamped to (0, pi) for the all-polynomials theorem
  std::vector<std::string> claims;      // empty = every known claim
  static const std::vector<std::string>& known_claims();
};

// Deterministic under config.seed: per-task seeds derive from the master and
// the task index, tasks run in parallel, and rows come back in task order.
std::vector<AuditReport> audit_sweep(const SweepConfig& config);

// Random interval subset of [lo, hi]: union of up to max_arcs arcs with
// uniform endpoints, redrawn until the measure clears 1e-6 * (hi - lo).
LineIntervalSet random_line_set(double lo, double hi, int max_arcs, std::uint64_t seed);

}  // namespace remezlab
