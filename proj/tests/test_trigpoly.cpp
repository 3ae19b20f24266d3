#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "remezlab/errors.hpp"
#include "remezlab/extremal.hpp"
#include "remezlab/parallel.hpp"
#include "remezlab/trigpoly.hpp"

using namespace remezlab;

namespace {

TrigPoly cosine() {
  TrigPoly q(1);
  q.set_coeff(1, 0.5);
  q.set_coeff(-1, 0.5);
  return q;
}

TrigPoly random_poly(int n, Rng& rng) {
  TrigPoly q(n);
  for (int k = -n; k <= n; ++k) q.set_coeff(k, Complex{rng.gauss(), rng.gauss()});
  return q;
}

}  // namespace

TEST_CASE("eval basics") {
  CHECK(eval(cosine(), 0.0).real() == doctest::Approx(1.0).epsilon(1e-14));

  TrigPoly e1(1);
  e1.set_coeff(1, 1.0);
  Complex v = eval(e1, M_PI / 2.0);
  CHECK(v.real() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(v.imag() == doctest::Approx(1.0).epsilon(1e-14));

  // Closed form at t = 0 for the n=1, s=pi extremal: T_2(sec(pi/4)) = 3.
  CHECK(eval(extremal_even(1, M_PI), 0.0).real() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("eval is periodic") {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    TrigPoly q = random_poly(5, rng);
    double t = rng.uniform(-10.0, 10.0);
    Complex a = eval(q, t);
    Complex b = eval(q, t + 2.0 * M_PI);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("sup_norm basics") {
  CHECK(sup_norm(cosine()) == doctest::Approx(1.0).epsilon(1e-12));

  TrigPoly three_e2(2);
  three_e2.set_coeff(2, 3.0);
  CHECK(sup_norm(three_e2) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("sup_norm agrees with 10x denser grids") {
  Rng rng(22);
  for (int rep = 0; rep < 10; ++rep) {
    TrigPoly q = random_poly(6, rng);
    double fast = sup_norm(q);
    double dense = oracles::grid_sup([&](double t) { return eval(q, t); }, 40960);
    CHECK(fast >= dense - 1e-9 * dense);
    CHECK(fast <= dense * (1.0 + 1e-7));
  }
}

TEST_CASE("parity decomposition is exact") {
  Rng rng(33);
  for (int rep = 0; rep < 1000; ++rep) {
    int n = 1 + static_cast<int>(rng.uniform_int(0, 9));
    TrigPoly r = random_poly(n, rng);
    TrigPoly e = even_part(r), o = odd_part(r);
    for (int k = -n; k <= n; ++k) {
      CHECK(e.coeff(k) + o.coeff(k) == r.coeff(k));
    }
  }
}

TEST_CASE("even/odd part examples") {
  TrigPoly e1(1);
  e1.set_coeff(1, 1.0);
  TrigPoly ev = even_part(e1);
  CHECK(ev.coeff(1) == Complex{0.5, 0.0});
  CHECK(ev.coeff(-1) == Complex{0.5, 0.0});
  TrigPoly od = odd_part(e1);
  CHECK(od.coeff(1) == Complex{0.5, 0.0});
  CHECK(od.coeff(-1) == Complex{-0.5, 0.0});

  TrigPoly sine(1);  // sin t = (e^{it} - e^{-it}) / 2i
  sine.set_coeff(1, Complex{0.0, -0.5});
  sine.set_coeff(-1, Complex{0.0, 0.5});
  CHECK(even_part(sine).max_coeff_abs() == 0.0);

  TrigPoly mix(2);  // cos t + sin 2t
  mix.set_coeff(1, 0.5);
  mix.set_coeff(-1, 0.5);
  mix.set_coeff(2, Complex{0.0, -0.5});
  mix.set_coeff(-2, Complex{0.0, 0.5});
  TrigPoly mix_even = even_part(mix);
  CHECK(mix_even.coeff(1) == Complex{0.5, 0.0});
  CHECK(mix_even.coeff(2) == Complex{0.0, 0.0});
}

TEST_CASE("abs_squared examples") {
  TrigPoly e1(1);
  e1.set_coeff(1, 1.0);
  TrigPoly a = abs_squared(e1);
  CHECK(a.coeff(0) == Complex{1.0, 0.0});
  CHECK(std::abs(a.coeff(2)) == 0.0);

  TrigPoly one_plus(1);
  one_plus.set_coeff(0, 1.0);
  one_plus.set_coeff(1, 1.0);
  TrigPoly b = abs_squared(one_plus);  // 2 + 2cos t
  CHECK(b.coeff(0) == Complex{2.0, 0.0});
  CHECK(b.coeff(1) == Complex{1.0, 0.0});
  CHECK(b.coeff(-1) == Complex{1.0, 0.0});

  TrigPoly c = abs_squared(cosine());  // (1 + cos 2t)/2
  CHECK(c.coeff(0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(c.coeff(2).real() == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("abs_squared matches pointwise |eval|^2") {
  Rng rng(44);
  for (int rep = 0; rep < 50; ++rep) {
    int n = 1 + static_cast<int>(rng.uniform_int(0, 9));
    TrigPoly q = random_poly(n, rng);
    TrigPoly a = abs_squared(q);
    double scale = 0.0;
    for (int i = 0; i < 128; ++i) scale = std::max(scale, std::norm(eval(q, 2.0 * M_PI * i / 128)));
    for (int i = 0; i < 128; ++i) {
      double t = 2.0 * M_PI * i / 128;
      double direct = std::norm(eval(q, t));
      Complex lifted = eval(a, t);
      CHECK(std::abs(lifted.real() - direct) <= 1e-11 * std::max(scale, 1e-30));
      CHECK(std::abs(lifted.imag()) <= 1e-11 * std::max(scale, 1e-30));
    }
  }
}

TEST_CASE("shift examples and round trip") {
  TrigPoly minus_cos = shift(cosine(), M_PI);
  CHECK(minus_cos.coeff(1).real() == doctest::Approx(-0.5).epsilon(1e-15));

  TrigPoly e1(1);
  e1.set_coeff(1, 1.0);
  Complex c = shift(e1, M_PI / 2.0).coeff(1);
  CHECK(c.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(c.imag() == doctest::Approx(1.0).epsilon(1e-15));

  Rng rng(55);
  for (int rep = 0; rep < 50; ++rep) {
    int n = 1 + static_cast<int>(rng.uniform_int(0, 7));
    TrigPoly r = random_poly(n, rng);
    double a = rng.uniform(-4.0, 4.0);
    TrigPoly back = shift(shift(r, a), -a);
    for (int k = -n; k <= n; ++k) CHECK(std::abs(back.coeff(k) - r.coeff(k)) <= 1e-12 * r.max_coeff_abs());
    // a = 0 is the identity exactly.
    TrigPoly same = shift(r, 0.0);
    for (int k = -n; k <= n; ++k) CHECK(same.coeff(k) == r.coeff(k));
    CHECK(sup_norm(shift(r, a)) == doctest::Approx(sup_norm(r)).epsilon(1e-9));
  }
}

TEST_CASE("parity classification") {
  TrigPoly c2(2);
  c2.set_coeff(2, 0.5);
  c2.set_coeff(-2, 0.5);
  CHECK(parity_of(c2, 1e-9) == Parity::Even);

  TrigPoly sine(1);
  sine.set_coeff(1, Complex{0.0, -0.5});
  sine.set_coeff(-1, Complex{0.0, 0.5});
  CHECK(parity_of(sine, 1e-9) == Parity::Odd);

  TrigPoly both = add(cosine(), sine);
  CHECK(parity_of(both, 1e-9) == Parity::Neither);

  CHECK(parity_of(TrigPoly(3), 1e-9) == Parity::Even);  // zero polynomial
  CHECK_THROWS_AS(parity_of(c2, 0.0), DomainError);
}

TEST_CASE("cos-poly bridge") {
  AlgPoly x(std::vector<Complex>{Complex{0.0, 0.0}, Complex{1.0, 0.0}});
  TrigPoly q = from_cos_poly(x);
  CHECK(q.coeff(1).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q.coeff(0).real() == doctest::Approx(0.0).epsilon(1e-15));

  AlgPoly t2(std::vector<Complex>{Complex{-1.0, 0.0}, Complex{0.0, 0.0}, Complex{2.0, 0.0}});
  TrigPoly cos2t = from_cos_poly(t2);
  CHECK(cos2t.coeff(2).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(cos2t.coeff(1)) <= 1e-14);
  CHECK(std::abs(cos2t.coeff(0)) <= 1e-14);

  // Derived: the n=1, s=pi extremal corresponds to P(x) = 2x + 1; checked
  // against the composed formula on a grid.
  AlgPoly p = to_cos_poly(extremal_even(1, M_PI));
  CHECK(p.coeff(0).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.coeff(1).real() == doctest::Approx(2.0).epsilon(1e-12));
  for (int i = 0; i < 64; ++i) {
    double t = 2.0 * M_PI * i / 64;
    CHECK(eval(p, std::cos(t)).real() ==
          doctest::Approx(eval(extremal_even(1, M_PI), t).real()).epsilon(1e-12));
  }

  TrigPoly sine(1);
  sine.set_coeff(1, Complex{0.0, -0.5});
  sine.set_coeff(-1, Complex{0.0, 0.5});
  CHECK_THROWS_AS(to_cos_poly(sine), NotEvenError);
}

TEST_CASE("cos-poly round trip on random even polynomials") {
  Rng rng(66);
  for (int rep = 0; rep < 50; ++rep) {
    int n = 1 + static_cast<int>(rng.uniform_int(0, 11));
    AlgPoly p = [&] {
      std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
      for (auto& v : c) v = Complex{rng.gauss(), rng.gauss()};
      return AlgPoly(c);
    }();
    AlgPoly back = to_cos_poly(from_cos_poly(p));
    double scale = 0.0;
    for (const auto& v : p.coeffs()) scale = std::max(scale, std::abs(v));
    for (int j = 0; j <= n; ++j) CHECK(std::abs(back.coeff(j) - p.coeff(j)) <= 1e-10 * scale);
  }
}
