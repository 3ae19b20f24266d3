#pragma once

#include <complex>
#include <vector>

namespace remezlab {

using Complex = std::complex<double>;

enum class Parity { Even, Odd, Neither };

// Complex trigonometric polynomial Q(t) = sum_{|k|<=n} c_k e^{ikt} on the
// period R (mod 2pi). Coefficients are kept in the exponential basis so that
// parity and |Q|^2 become exact coefficient operations; the cosine/sine view
// is derived on demand.
class TrigPoly {
 public:
  TrigPoly() : degree_(0), coeffs_(1, Complex{0.0, 0.0}) {}
  explicit TrigPoly(int degree);
  TrigPoly(int degree, std::vector<Complex> coeffs);  // coeffs[k+n], size 2n+1

  int degree() const { return degree_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  // Coefficient c_k; zero outside [-n, n].
  Complex coeff(int k) const;
  void set_coeff(int k, Complex value);

  bool is_zero() const;
  double max_coeff_abs() const;

 private:
  int degree_;
  std::vector<Complex> coeffs_;
};

// Algebraic polynomial sum_j a_j x^j with complex coefficients, power basis.
// The trailing coefficient may be zero: degree is an upper bound.
class AlgPoly {
 public:
  AlgPoly() : coeffs_(1, Complex{0.0, 0.0}) {}
  explicit AlgPoly(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(int j) const;
  void set_coeff(int j, Complex value);

 private:
  std::vector<Complex> coeffs_;  // size degree+1
};

Complex eval(const TrigPoly& q, double t);
Complex eval(const AlgPoly& p, double x);
Complex eval(const AlgPoly& p, Complex x);

// max_{t in K} |Q(t)|, dense grid plus golden-section refinement around every
// grid maximum. `density` multiplies the default grid resolution (64*n,
// minimum 256); verification paths pass 10.
double sup_norm(const TrigPoly& q, int density = 1);

TrigPoly even_part(const TrigPoly& r);
TrigPoly odd_part(const TrigPoly& r);

// |Q|^2 as a trig polynomial of degree 2n: d_m = sum_k c_k conj(c_{k-m}).
// Real-valued by construction; even whenever Q is even or odd.
TrigPoly abs_squared(const TrigPoly& q);

// R(t+a): c_k -> c_k e^{ika}. Sup-norm and deficiency invariant.
TrigPoly shift(const TrigPoly& r, double a);

TrigPoly scale(const TrigPoly& q, Complex factor);
TrigPoly add(const TrigPoly& a, const TrigPoly& b);

// Even / Odd if the coefficient (anti)symmetry defect is within tol relative
// to the largest coefficient; the zero polynomial reports Even.
Parity parity_of(const TrigPoly& q, double tol);

// c_{-k} == conj(c_k) within tol relative to the largest coefficient.
bool is_real_valued(const TrigPoly& q, double tol);

// Bridge between even trig polynomials and algebraic polynomials under
// x = cos t, via the Chebyshev identity cos kt = T_k(cos t).
TrigPoly from_cos_poly(const AlgPoly& p);
AlgPoly to_cos_poly(const TrigPoly& q);  // throws NotEvenError

AlgPoly alg_multiply(const AlgPoly& a, const AlgPoly& b);
AlgPoly alg_scale(const AlgPoly& a, Complex factor);

// outer(inner(x)) by Horner over the outer coefficients.
AlgPoly alg_compose(const AlgPoly& outer, const AlgPoly& inner);

}  // namespace remezlab
