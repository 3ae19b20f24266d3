#include "remezlab/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "remezlab/chebyshev.hpp"
#include "remezlab/errors.hpp"

namespace remezlab {

TrigPoly::TrigPoly(int degree) : degree_(degree) {
  if (degree < 0) throw DomainError("TrigPoly degree must be nonnegative");
  coeffs_.assign(2 * degree + 1, Complex{0.0, 0.0});
}

TrigPoly::TrigPoly(int degree, std::vector<Complex> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw DomainError("TrigPoly degree must be nonnegative");
  if (coeffs_.size() != static_cast<std::size_t>(2 * degree + 1))
    throw DomainError("TrigPoly needs exactly 2n+1 coefficients");
}

Complex TrigPoly::coeff(int k) const {
  if (k < -degree_ || k > degree_) return Complex{0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(k + degree_)];
}

void TrigPoly::set_coeff(int k, Complex value) {
  if (k < -degree_ || k > degree_) throw DomainError("coefficient index out of range");
  coeffs_[static_cast<std::size_t>(k + degree_)] = value;
}

bool TrigPoly::is_zero() const { return max_coeff_abs() == 0.0; }

double TrigPoly::max_coeff_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

AlgPoly::AlgPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.assign(1, Complex{0.0, 0.0});
}

Complex AlgPoly::coeff(int j) const {
  if (j < 0 || j > degree()) return Complex{0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(j)];
}

void AlgPoly::set_coeff(int j, Complex value) {
  if (j < 0 || j > degree()) throw DomainError("coefficient index out of range");
  coeffs_[static_cast<std::size_t>(j)] = value;
}

Complex eval(const TrigPoly& q, double t) {
  // Horner in z = e^{it} over c_{-n}..c_n, then multiply by z^{-n}.
  const int n = q.degree();
  const Complex z = std::polar(1.0, t);
  Complex acc{0.0, 0.0};
  const auto& c = q.coeffs();
  for (int j = 2 * n; j >= 0; --j) acc = acc * z + c[static_cast<std::size_t>(j)];
  return acc * std::polar(1.0, -static_cast<double>(n) * t);
}

Complex eval(const AlgPoly& p, double x) { return eval(p, Complex{x, 0.0}); }

Complex eval(const AlgPoly& p, Complex x) {
  Complex acc{0.0, 0.0};
  const auto& a = p.coeffs();
  for (int j = p.degree(); j >= 0; --j) acc = acc * x + a[static_cast<std::size_t>(j)];
  return acc;
}

namespace {

double abs2_at(const TrigPoly& q, double t) {
  Complex v = eval(q, t);
  return v.real() * v.real() + v.imag() * v.imag();
}

// Golden-section maximization of |q|^2 on [lo, hi].
double golden_max(const TrigPoly& q, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = abs2_at(q, x1);
  double f2 = abs2_at(q, x2);
  for (int it = 0; it < 48 && (b - a) > 1e-12; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = abs2_at(q, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = abs2_at(q, x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

double sup_norm(const TrigPoly& q, int density) {
  const int n = q.degree();
  if (density < 1) density = 1;
  const int grid = std::max(256, 64 * std::max(n, 1)) * density;
  const double h = 2.0 * M_PI / grid;
  std::vector<double> v(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) v[static_cast<std::size_t>(i)] = abs2_at(q, i * h);

  double best = 0.0;
  for (int i = 0; i < grid; ++i) {
    double prev = v[static_cast<std::size_t>((i + grid - 1) % grid)];
    double next = v[static_cast<std::size_t>((i + 1) % grid)];
    double cur = v[static_cast<std::size_t>(i)];
    if (cur >= prev && cur >= next) {
      double t = i * h;
      best = std::max(best, golden_max(q, t - h, t + h));
    }
  }
  return std::sqrt(best);
}

TrigPoly even_part(const TrigPoly& r) {
  const int n = r.degree();
  TrigPoly out(n);
  for (int k = 0; k <= n; ++k) {
    Complex e = (r.coeff(k) + r.coeff(-k)) * 0.5;
    out.set_coeff(k, e);
    out.set_coeff(-k, e);
  }
  return out;
}

TrigPoly odd_part(const TrigPoly& r) {
  const int n = r.degree();
  TrigPoly out(n);
  for (int k = 1; k <= n; ++k) {
    Complex o = (r.coeff(k) - r.coeff(-k)) * 0.5;
    out.set_coeff(k, o);
    out.set_coeff(-k, -o);
  }
  return out;
}

TrigPoly abs_squared(const TrigPoly& q) {
  const int n = q.degree();
  TrigPoly out(2 * n);
  for (int m = 0; m <= 2 * n; ++m) {
    Complex d{0.0, 0.0};
    for (int k = std::max(-n, m - n); k <= n; ++k) d += q.coeff(k) * std::conj(q.coeff(k - m));
    out.set_coeff(m, d);
    out.set_coeff(-m, std::conj(d));
  }
  return out;
}

TrigPoly shift(const TrigPoly& r, double a) {
  const int n = r.degree();
  TrigPoly out(n);
  for (int k = -n; k <= n; ++k) out.set_coeff(k, r.coeff(k) * std::polar(1.0, k * a));
  return out;
}

TrigPoly scale(const TrigPoly& q, Complex factor) {
  const int n = q.degree();
  TrigPoly out(n);
  for (int k = -n; k <= n; ++k) out.set_coeff(k, q.coeff(k) * factor);
  return out;
}

TrigPoly add(const TrigPoly& a, const TrigPoly& b) {
  const int n = std::max(a.degree(), b.degree());
  TrigPoly out(n);
  for (int k = -n; k <= n; ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
  return out;
}

Parity parity_of(const TrigPoly& q, double tol) {
  if (tol <= 0.0) throw DomainError("parity tolerance must be positive");
  const int n = q.degree();
  double maxc = q.max_coeff_abs();
  if (maxc == 0.0) return Parity::Even;
  double even_defect = 0.0, odd_defect = 0.0;
  for (int k = 0; k <= n; ++k) {
    even_defect = std::max(even_defect, std::abs(q.coeff(k) - q.coeff(-k)));
    odd_defect = std::max(odd_defect, std::abs(q.coeff(k) + q.coeff(-k)));
  }
  if (even_defect <= tol * maxc) return Parity::Even;
  if (odd_defect <= tol * maxc) return Parity::Odd;
  return Parity::Neither;
}

bool is_real_valued(const TrigPoly& q, double tol) {
  double maxc = q.max_coeff_abs();
  if (maxc == 0.0) return true;
  double defect = 0.0;
  for (int k = 0; k <= q.degree(); ++k)
    defect = std::max(defect, std::abs(q.coeff(-k) - std::conj(q.coeff(k))));
  return defect <= tol * maxc;
}

TrigPoly from_cos_poly(const AlgPoly& p) {
  // P = sum beta_k T_k via back-substitution against the T_k coefficient
  // table, then cos kt = T_k(cos t) gives c_0 = beta_0, c_{+-k} = beta_k/2.
  const int n = p.degree();
  std::vector<Complex> residual = p.coeffs();
  std::vector<Complex> beta(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
  for (int k = n; k >= 1; --k) {
    AlgPoly tk = cheb_coeffs(k);
    Complex b = residual[static_cast<std::size_t>(k)] / tk.coeff(k);
    beta[static_cast<std::size_t>(k)] = b;
    for (int j = 0; j <= k; ++j) residual[static_cast<std::size_t>(j)] -= b * tk.coeff(j);
  }
  beta[0] = residual[0];
  TrigPoly out(n);
  out.set_coeff(0, beta[0]);
  for (int k = 1; k <= n; ++k) {
    out.set_coeff(k, beta[static_cast<std::size_t>(k)] * 0.5);
    out.set_coeff(-k, beta[static_cast<std::size_t>(k)] * 0.5);
  }
  return out;
}

AlgPoly to_cos_poly(const TrigPoly& q) {
  const int n = q.degree();
  double maxc = q.max_coeff_abs();
  for (int k = 1; k <= n; ++k) {
    if (std::abs(q.coeff(k) - q.coeff(-k)) > 1e-10 * std::max(maxc, 1e-300))
      throw NotEvenError("to_cos_poly requires an even polynomial");
  }
  std::vector<Complex> acc(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
  acc[0] = q.coeff(0);
  for (int k = 1; k <= n; ++k) {
    Complex b = q.coeff(k) + q.coeff(-k);  // cos-basis coefficient
    AlgPoly tk = cheb_coeffs(k);
    for (int j = 0; j <= k; ++j) acc[static_cast<std::size_t>(j)] += b * tk.coeff(j);
  }
  return AlgPoly(std::move(acc));
}

AlgPoly alg_multiply(const AlgPoly& a, const AlgPoly& b) {
  std::vector<Complex> out(static_cast<std::size_t>(a.degree() + b.degree()) + 1, Complex{0.0, 0.0});
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) out[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  return AlgPoly(std::move(out));
}

AlgPoly alg_scale(const AlgPoly& a, Complex factor) {
  std::vector<Complex> out = a.coeffs();
  for (auto& c : out) c *= factor;
  return AlgPoly(std::move(out));
}

AlgPoly alg_compose(const AlgPoly& outer, const AlgPoly& inner) {
  AlgPoly acc(std::vector<Complex>{outer.coeff(outer.degree())});
  for (int j = outer.degree() - 1; j >= 0; --j) {
    acc = alg_multiply(acc, inner);
    acc.set_coeff(0, acc.coeff(0) + outer.coeff(j));
  }
  return acc;
}

}  // namespace remezlab
