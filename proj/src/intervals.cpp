#include "remezlab/intervals.hpp"

#include <algorithm>
#include <cmath>

#include "remezlab/errors.hpp"

namespace remezlab {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kMergeTol = 1e-12;

std::vector<Arc> merge_sorted(std::vector<Arc> arcs, double tol) {
  std::vector<Arc> out;
  for (const Arc& a : arcs) {
    if (!(a.hi > a.lo)) continue;
    if (!out.empty() && a.lo - out.back().hi <= tol) {
      out.back().hi = std::max(out.back().hi, a.hi);
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

CircleIntervalSet CircleIntervalSet::from_raw(std::vector<Arc> raw) {
  std::vector<Arc> pieces;
  for (const Arc& a : raw) {
    if (!(a.hi > a.lo)) continue;
    double len = std::min(a.hi - a.lo, kTwoPi);
    double lo = std::fmod(a.lo, kTwoPi);
    if (lo < 0.0) lo += kTwoPi;
    if (lo + len <= kTwoPi) {
      pieces.push_back({lo, lo + len});
    } else {
      pieces.push_back({lo, kTwoPi});
      pieces.push_back({0.0, lo + len - kTwoPi});
    }
  }
  std::sort(pieces.begin(), pieces.end(), [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
  CircleIntervalSet s;
  s.arcs_ = merge_sorted(std::move(pieces), kMergeTol);
  return s;
}

CircleIntervalSet CircleIntervalSet::full() {
  CircleIntervalSet s;
  s.arcs_ = {Arc{0.0, kTwoPi}};
  return s;
}

CircleIntervalSet CircleIntervalSet::empty() { return CircleIntervalSet{}; }

bool CircleIntervalSet::is_full() const {
  return arcs_.size() == 1 && arcs_[0].lo <= kMergeTol && arcs_[0].hi >= kTwoPi - kMergeTol;
}

bool CircleIntervalSet::contains(double t) const {
  double x = std::fmod(t, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  for (const Arc& a : arcs_) {
    if (x >= a.lo && x <= a.hi) return true;
  }
  return false;
}

LineIntervalSet::LineIntervalSet(double host_lo, double host_hi, std::vector<Arc> parts)
    : host_lo_(host_lo), host_hi_(host_hi) {
  if (!(host_hi > host_lo)) throw DomainError("host interval must satisfy a < b");
  for (Arc& a : parts) {
    a.lo = std::max(a.lo, host_lo);
    a.hi = std::min(a.hi, host_hi);
  }
  std::sort(parts.begin(), parts.end(), [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
  parts_ = merge_sorted(std::move(parts), kMergeTol);
}

double lebesgue(const CircleIntervalSet& s) {
  double m = 0.0;
  for (const Arc& a : s.arcs()) m += a.hi - a.lo;
  return m;
}

double lebesgue(const LineIntervalSet& s) {
  double m = 0.0;
  for (const Arc& a : s.parts()) m += a.hi - a.lo;
  return m;
}

std::pair<LineIntervalSet, LineIntervalSet> split_at(const LineIntervalSet& s, double cut) {
  if (!(cut > s.host_lo() && cut < s.host_hi())) throw DomainError("cut must be interior to the host");
  std::vector<Arc> left, right;
  for (const Arc& a : s.parts()) {
    if (a.hi <= cut) {
      left.push_back(a);
    } else if (a.lo >= cut) {
      right.push_back(a);
    } else {
      left.push_back({a.lo, cut});
      right.push_back({cut, a.hi});
    }
  }
  return {LineIntervalSet(s.host_lo(), cut, std::move(left)),
          LineIntervalSet(cut, s.host_hi(), std::move(right))};
}

double cheb_measure(double a, double b, const LineIntervalSet& s) {
  if (!(b > a)) throw DomainError("cheb_measure requires a < b");
  const double radius = 0.5 * (b - a);
  const double center = 0.5 * (a + b);
  const double slack = 1e-12 * (b - a);
  double total = 0.0;
  for (const Arc& arc : s.parts()) {
    if (arc.lo < a - slack || arc.hi > b + slack) throw DomainError("interval set leaves the measure host");
    double plo = std::clamp((arc.lo - center) / radius, -1.0, 1.0);
    double phi = std::clamp((arc.hi - center) / radius, -1.0, 1.0);
    total += radius * (std::asin(phi) - std::asin(plo));
  }
  return total;
}

}  // namespace remezlab
