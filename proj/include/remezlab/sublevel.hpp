#pragma once

#include <string>
#include <utility>
#include <vector>

#include "remezlab/intervals.hpp"
#include "remezlab/trigpoly.hpp"

namespace remezlab {

// Eigen: boundary roots as companion-matrix eigenvalues of the associated
// algebraic polynomial, kept near the unit circle and Newton-polished.
// Sample: sign scan of |Q|^2 - level^2 on a dense grid with bisection.
enum class SublevelBackend { Eigen, Sample };

SublevelBackend backend_from_string(const std::string& name);  // throws DomainError
std::string to_string(SublevelBackend backend);

// {t in K : |Q(t)| <= level} as a canonical circle interval set. Arc
// boundaries are roots of |Q|^2 - level^2; roots without a sign change are
// measure-zero touch points and do not split arcs.
CircleIntervalSet sublevel_set(const TrigPoly& q, double level,
                               SublevelBackend backend = SublevelBackend::Eigen);

// s_Q = 2pi - m({t : |Q(t)| <= 1}); the smallest s with Q in T_n^c(s).
double deficiency(const TrigPoly& q, SublevelBackend backend = SublevelBackend::Eigen);

// Sample-backend machinery with the |Q(t_i)|^2 grid cached, for callers that
// probe many levels of the same polynomial (member rescaling, search).
// `density` multiplies the default grid resolution.
class LevelScanner {
 public:
  explicit LevelScanner(const TrigPoly& q, int density = 1);

  CircleIntervalSet sublevel(double level) const;
  double deficiency_at(double level) const;  // 2pi - m({|q| <= level})
  double grid_max_abs() const;               // max_i |q(t_i)|, refinement-free
  const std::vector<double>& grid_values() const { return values_; }  // |q(t_i)|^2

 private:
  TrigPoly q_;
  int grid_;
  std::vector<double> values_;  // |q(t_i)|^2
};

// {x in [a,b] : |P(x)| <= level} for an algebraic polynomial, via real
// companion roots of |P|^2 - level^2.
LineIntervalSet alg_sublevel(const AlgPoly& p, double level, double a, double b);

// Two routes to the same mass for even Q: the arcsine measure of
// {x in [-1,1] : |P(x)| <= 1} with P = to_cos_poly(Q), and half the Lebesgue
// measure of the circle sublevel set. Returns (mu, half_circle_measure).
std::pair<double, double> pushforward_check(const TrigPoly& q);

}  // namespace remezlab
