#pragma once

#include <utility>
#include <vector>

namespace remezlab {

struct Arc {
  double lo;
  double hi;
};

// Disjoint union of arcs on R (mod 2pi). Canonical form: 0 <= lo < hi <= 2pi,
// sorted, pairwise disjoint with gaps above the merge tolerance 1e-12; a
// wraparound arc is stored split at 2pi; the full circle is the single arc
// (0, 2pi).
class CircleIntervalSet {
 public:
  CircleIntervalSet() = default;

  // Canonicalizes arbitrary (lo, hi) arcs with lo < hi, wrapping mod 2pi.
  static CircleIntervalSet from_raw(std::vector<Arc> raw);
  static CircleIntervalSet full();
  static CircleIntervalSet empty();

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool is_empty() const { return arcs_.empty(); }
  bool is_full() const;
  bool contains(double t) const;  // t taken mod 2pi

 private:
  std::vector<Arc> arcs_;
};

// Sorted disjoint closed subintervals of a host interval [a, b].
class LineIntervalSet {
 public:
  LineIntervalSet() : host_lo_(0.0), host_hi_(0.0) {}
  LineIntervalSet(double host_lo, double host_hi, std::vector<Arc> parts);

  double host_lo() const { return host_lo_; }
  double host_hi() const { return host_hi_; }
  const std::vector<Arc>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }

 private:
  double host_lo_, host_hi_;
  std::vector<Arc> parts_;
};

double lebesgue(const CircleIntervalSet& s);
double lebesgue(const LineIntervalSet& s);

// Splits S at `cut` into a part hosted on [host_lo, cut] and one on
// [cut, host_hi]; the union restores S up to the single point at cut.
std::pair<LineIntervalSet, LineIntervalSet> split_at(const LineIntervalSet& s, double cut);

// Chebyshev (arcsine) measure of S under the host [a, b]: per part [c, d] the
// closed form ((b-a)/2) (arcsin psi(d) - arcsin psi(c)) with
// psi(x) = (x - (a+b)/2) / ((b-a)/2). Throws DomainError when a part leaves
// [a, b]. Total mass over [a, b] is ((b-a)/2) pi.
double cheb_measure(double a, double b, const LineIntervalSet& s);

}  // namespace remezlab
