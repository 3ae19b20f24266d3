#include "remezlab/extremal.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "remezlab/chebyshev.hpp"
#include "remezlab/errors.hpp"
#include "remezlab/sublevel.hpp"

namespace remezlab {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void require_witness_domain(int n, double s) {
  if (n < 1) throw DomainError("degree must be at least 1");
  if (!(s > 0.0 && s < kTwoPi)) throw DomainError("s must lie in (0, 2pi)");
}

}  // namespace

TrigPoly extremal_even(int n, double s) {
  require_witness_domain(n, s);
  // T_{2n} has only even powers: T_{2n}(y) = S(y^2) with deg S = n. Under
  // y = cos(t/2)/cos(s/4) we get y^2 = sec^2(s/4) (1 + cos t)/2, an affine
  // function of cos t, so S composed with it is a degree-n cosine polynomial.
  AlgPoly t2n = cheb_coeffs(2 * n);
  std::vector<Complex> s_coeffs(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) s_coeffs[static_cast<std::size_t>(j)] = t2n.coeff(2 * j);

  const double cs = std::cos(s / 4.0);
  const double half_sigma = 0.5 / (cs * cs);
  AlgPoly affine(std::vector<Complex>{Complex{half_sigma, 0.0}, Complex{half_sigma, 0.0}});

  AlgPoly acc(std::vector<Complex>{s_coeffs[static_cast<std::size_t>(n)]});
  for (int j = n - 1; j >= 0; --j) {
    acc = alg_multiply(acc, affine);
    acc.set_coeff(0, acc.coeff(0) + s_coeffs[static_cast<std::size_t>(j)]);
  }
  TrigPoly q = from_cos_poly(acc);

  // Self-check against the composed formula unless the values overflow.
  double log_bound = log_bound_even(n, s);
  if (log_bound < 700.0) {
    double bound = bound_even(n, s);
    double worst = 0.0;
    for (int i = 0; i < 256; ++i) {
      double t = kTwoPi * i / 256.0;
      double ref = cheb_T(2 * n, std::cos(t / 2.0) / cs);
      worst = std::max(worst, std::abs(eval(q, t).real() - ref));
    }
    if (worst > 1e-9 * bound)
      throw NoConvergenceError("extremal_even construction self-check failed");
  }
  return q;
}

AlgPoly extremal_classical(int n, double s) {
  if (n < 1) throw DomainError("degree must be at least 1");
  if (!(s > 0.0 && s < 2.0)) throw DomainError("s must lie in (0, 2)");
  AlgPoly tn = cheb_coeffs(n);
  AlgPoly affine(std::vector<Complex>{Complex{s / (2.0 - s), 0.0}, Complex{2.0 / (2.0 - s), 0.0}});
  AlgPoly acc(std::vector<Complex>{tn.coeff(n)});
  for (int j = n - 1; j >= 0; --j) {
    acc = alg_multiply(acc, affine);
    acc.set_coeff(0, acc.coeff(0) + tn.coeff(j));
  }
  double at_edge = std::abs(eval(acc, 1.0 - s));
  double at_one = std::abs(eval(acc, 1.0));
  double bound = bound_classical(n, s);
  if (std::abs(at_edge - 1.0) > 1e-9 || std::abs(at_one - bound) > 1e-9 * bound)
    throw NoConvergenceError("extremal_classical construction self-check failed");
  return acc;
}

ExtremalWitness equality_witness(int n, double s) {
  require_witness_domain(n, s);
  ExtremalWitness w;
  w.n = n;
  w.s = s;
  w.poly = extremal_even(n, s);
  w.log_bound = log_bound_even(n, s);
  w.log_domain = w.log_bound >= 700.0;

  // Sup of the coefficient-normalized polynomial keeps |Q|^2 inside the
  // double range even when the bound itself does not.
  double max_coeff = w.poly.max_coeff_abs();
  double sup_scaled = sup_norm(scale(w.poly, Complex{1.0 / max_coeff, 0.0}));
  w.log_sup = std::log(sup_scaled) + std::log(max_coeff);
  w.ratio = std::exp(w.log_sup - w.log_bound);
  if (!w.log_domain) {
    w.bound = bound_even(n, s);
    w.attained_sup = sup_scaled * max_coeff;
  } else {
    w.bound = std::numeric_limits<double>::quiet_NaN();
    w.attained_sup = std::numeric_limits<double>::quiet_NaN();
  }

  w.sublevel = sublevel_set(w.poly, 1.0, SublevelBackend::Eigen);
  w.sublevel_measure = lebesgue(w.sublevel);

  std::ostringstream diag;
  bool ok = true;
  if (!(std::abs(w.ratio - 1.0) <= 1e-8)) {
    diag << "sup/bound ratio " << w.ratio << " off unity; ";
    ok = false;
  }
  if (!(std::abs(w.sublevel_measure - (kTwoPi - s)) <= 1e-6)) {
    diag << "sublevel measure " << w.sublevel_measure << " vs target " << (kTwoPi - s) << "; ";
    ok = false;
  }
  if (!ok) {
    std::ostringstream msg;
    msg << "equality witness failed at n=" << n << " s=" << s << ": " << diag.str();
    throw WitnessFailure(msg.str());
  }
  return w;
}

}  // namespace remezlab
