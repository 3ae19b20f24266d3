#pragma once

#include <cstdint>
#include <vector>

#include "remezlab/chebyshev.hpp"
#include "remezlab/trigpoly.hpp"

namespace remezlab {

struct StepSchedule {
  double initial = 0.4;  // fraction of the starting coefficient scale
  double decay = 0.5;
  double min = 1e-7;
};

struct SearchConfig {
  int n = 1;
  double s = M_PI;
  Parity parity = Parity::Even;
  bool real_coeffs = false;
  int restarts = 8;
  int budget = 2000;  // objective evaluations per restart
  std::uint64_t seed = 1;
  double kappa = 0.0;  // 0 = default 10*bound capped at 1e6
  StepSchedule schedule;
  BoundKind kind = BoundKind::EvenPeriod;
};

struct TracePoint {
  long evals;
  double ratio;
};

struct SearchResult {
  TrigPoly best_poly;
  double best_ratio = 0.0;
  int best_restart = -1;
  bool violated = false;
  std::vector<TracePoint> trace;  // best restart, best-so-far, <= 1000 points
  std::uint64_t master_seed = 0;
  std::vector<std::uint64_t> restart_seeds;
  double best_sup = 0.0;
  double best_deficiency = 0.0;
  double s_adjusted = 0.0;  // deficiency of the winner at verification density
  double log_bound_used = 0.0;
};

// sup|Q| / bound(kind; n, s), in log domain when the bound leaves the double
// range. Throws ConstraintViolated when deficiency(Q) > s + 1e-6.
double sharpness_ratio(const TrigPoly& q, double s, BoundKind kind);

// Randomly restarted coordinate pattern search over coefficient components,
// maximizing sup|Q| subject to deficiency(Q) <= s via penalty plus exact
// lambda-rescaling on accepted moves. Deterministic under config.seed; the
// winner is re-verified at 10x density before the ratio is reported.
SearchResult maximize_ratio(const SearchConfig& config);

}  // namespace remezlab
