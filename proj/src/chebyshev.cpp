#include "remezlab/chebyshev.hpp"

#include <cmath>

#include "remezlab/errors.hpp"

namespace remezlab {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kLogDblMax = 709.782712893384;

void require_nonnegative_degree(int n) {
  if (n < 0) throw DomainError("Chebyshev degree must be nonnegative");
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::EvenPeriod: return "even";
    case BoundKind::OddPeriod: return "odd";
    case BoundKind::AllPeriod: return "all";
    case BoundKind::ClassicalAlgebraic: return "classical";
    case BoundKind::ClassicalExp: return "classical-exp";
  }
  return "?";
}

BoundKind bound_kind_from_string(const std::string& name) {
  if (name == "even") return BoundKind::EvenPeriod;
  if (name == "odd") return BoundKind::OddPeriod;
  if (name == "all") return BoundKind::AllPeriod;
  if (name == "classical") return BoundKind::ClassicalAlgebraic;
  if (name == "classical-exp") return BoundKind::ClassicalExp;
  throw DomainError("unknown bound kind: " + name);
}

void check_bound_domain(BoundKind kind, double s) {
  switch (kind) {
    case BoundKind::EvenPeriod:
    case BoundKind::OddPeriod:
      if (!(s > 0.0 && s < kTwoPi)) throw DomainError("s must lie in (0, 2pi)");
      return;
    case BoundKind::AllPeriod:
      if (!(s > 0.0 && s < M_PI)) throw DomainError("s must lie in (0, pi)");
      return;
    case BoundKind::ClassicalAlgebraic:
      if (!(s > 0.0 && s < 2.0)) throw DomainError("s must lie in (0, 2)");
      return;
    case BoundKind::ClassicalExp:
      if (!(s > 0.0 && s <= 1.0)) throw DomainError("s must lie in (0, 1]");
      return;
  }
}

double cheb_T(int n, double x) {
  require_nonnegative_degree(n);
  if (std::abs(x) <= 1.0) return std::cos(n * std::acos(x));
  if (x < 0.0) {
    double v = cheb_T(n, -x);
    return (n % 2 == 0) ? v : -v;
  }
  // x > 1: w = x + sqrt(x^2-1) > 1, T_n = (w^n + w^-n)/2. The reciprocal
  // replaces the cancellation-prone x - sqrt(x^2-1).
  double w = x + std::sqrt(x * x - 1.0);
  double lw = std::log(w);
  if (n * lw >= kLogDblMax) throw OverflowError("cheb_T exceeds double range; use log_cheb_T");
  double wn = std::pow(w, n);
  return 0.5 * (wn + 1.0 / wn);
}

double log_cheb_T(int n, double x) {
  require_nonnegative_degree(n);
  if (!(x > 1.0)) throw DomainError("log_cheb_T requires x > 1");
  double w = x + std::sqrt(x * x - 1.0);
  double lw = std::log(w);
  // q = (x - sqrt(x^2-1)) / (x + sqrt(x^2-1)) = w^-2
  double qn = std::exp(-2.0 * n * lw);
  return n * lw + std::log1p(qn) - M_LN2;
}

AlgPoly cheb_coeffs(int n) {
  require_nonnegative_degree(n);
  std::vector<Complex> prev{Complex{1.0, 0.0}};       // T_0
  if (n == 0) return AlgPoly(prev);
  std::vector<Complex> cur{Complex{0.0, 0.0}, Complex{1.0, 0.0}};  // T_1
  for (int k = 2; k <= n; ++k) {
    std::vector<Complex> next(static_cast<std::size_t>(k) + 1, Complex{0.0, 0.0});
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2.0 * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return AlgPoly(cur);
}

namespace {

void require_even_domain(int n, double s) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  if (!(s > 0.0 && s < kTwoPi)) throw DomainError("s must lie in (0, 2pi)");
}

}  // namespace

double bound_even(int n, double s) {
  require_even_domain(n, s);
  return cheb_T(2 * n, 1.0 / std::cos(s / 4.0));
}

double bound_even_identity(int n, double s) {
  require_even_domain(n, s);
  double sec = 1.0 / std::cos(s / 4.0);
  double tan = std::tan(s / 4.0);
  double u = sec + tan;
  double lu = std::log(u);
  if (2.0 * n * lu >= kLogDblMax) throw OverflowError("bound exceeds double range; use log variant");
  double un = std::pow(u, 2 * n);
  // sec - tan = 1/(sec + tan)
  return 0.5 * (un + 1.0 / un);
}

double bound_odd(int n, double s) {
  if (n < 1) throw DomainError("odd bound requires degree >= 1");
  return bound_even(n, s) + M_SQRT1_2;
}

double odd_sqrt_step(int n, double s) {
  if (n < 1) throw DomainError("odd bound requires degree >= 1");
  require_even_domain(n, s);
  double sec = 1.0 / std::cos(s / 4.0);
  double tan = std::tan(s / 4.0);
  double u = sec + tan;
  double lu = std::log(u);
  if (4.0 * n * lu >= kLogDblMax) throw OverflowError("odd_sqrt_step exceeds double range");
  double u4n = std::pow(u, 4 * n);
  return std::sqrt(0.25 * (u4n + 1.0 / u4n) + 0.5);
}

double bound_all(int n, double s) {
  if (!(s > 0.0 && s < M_PI)) throw DomainError("s must lie in (0, pi)");
  return bound_even(n, 2.0 * s);
}

double bound_classical(int n, double s) {
  if (!(s > 0.0 && s < 2.0)) throw DomainError("s must lie in (0, 2)");
  return cheb_T(n, (2.0 + s) / (2.0 - s));
}

double bound_classical_exp(int n, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("s must lie in (0, 1]");
  double arg = log_bound_classical_exp(n, s);
  if (arg >= kLogDblMax) throw OverflowError("classical exp bound exceeds double range");
  return std::exp(arg);
}

double log_bound_even(int n, double s) {
  require_even_domain(n, s);
  return log_cheb_T(2 * n, 1.0 / std::cos(s / 4.0));
}

double log_bound_odd(int n, double s) {
  if (n < 1) throw DomainError("odd bound requires degree >= 1");
  double le = log_bound_even(n, s);
  return le + std::log1p(std::exp(std::log(M_SQRT1_2) - le));
}

double log_bound_all(int n, double s) {
  if (!(s > 0.0 && s < M_PI)) throw DomainError("s must lie in (0, pi)");
  return log_bound_even(n, 2.0 * s);
}

double log_bound_classical(int n, double s) {
  if (!(s > 0.0 && s < 2.0)) throw DomainError("s must lie in (0, 2)");
  return log_cheb_T(n, (2.0 + s) / (2.0 - s));
}

double log_bound_classical_exp(int n, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("s must lie in (0, 1]");
  double dn = n;
  return std::min(5.0 * dn * std::sqrt(s), 2.0 * dn * dn * s);
}

double bound_value(BoundKind kind, int n, double s) {
  switch (kind) {
    case BoundKind::EvenPeriod: return bound_even(n, s);
    case BoundKind::OddPeriod: return bound_odd(n, s);
    case BoundKind::AllPeriod: return bound_all(n, s);
    case BoundKind::ClassicalAlgebraic: return bound_classical(n, s);
    case BoundKind::ClassicalExp: return bound_classical_exp(n, s);
  }
  throw DomainError("unknown bound kind");
}

double log_bound_value(BoundKind kind, int n, double s) {
  switch (kind) {
    case BoundKind::EvenPeriod: return log_bound_even(n, s);
    case BoundKind::OddPeriod: return log_bound_odd(n, s);
    case BoundKind::AllPeriod: return log_bound_all(n, s);
    case BoundKind::ClassicalAlgebraic: return log_bound_classical(n, s);
    case BoundKind::ClassicalExp: return log_bound_classical_exp(n, s);
  }
  throw DomainError("unknown bound kind");
}

}  // namespace remezlab
