#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "remezlab/chebyshev.hpp"
#include "remezlab/errors.hpp"
#include "remezlab/extremal.hpp"
#include "remezlab/sublevel.hpp"

using namespace remezlab;

TEST_CASE("extremal_even hand case n=1, s=pi is 2cos t + 1") {
  TrigPoly q = extremal_even(1, M_PI);
  CHECK(q.coeff(0).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q.coeff(1).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q.coeff(-1).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eval(q, 0.0).real() == doctest::Approx(bound_even(1, M_PI)).epsilon(1e-12));
}

TEST_CASE("extremal_even boundary and interior values") {
  for (int n : {1, 2, 3, 5}) {
    for (double s : {0.5, 2.0, M_PI, 5.4}) {
      TrigPoly q = extremal_even(n, s);
      // |Q(s/2)| = T_{2n}(1) = 1 at the sublevel boundary.
      CHECK(std::abs(eval(q, s / 2.0)) == doctest::Approx(1.0).epsilon(1e-8));
      // t = pi sits deep inside the sublevel set: T_{2n}(0) in modulus <= 1.
      CHECK(std::abs(eval(q, M_PI)) <= 1.0 + 1e-9);
      CHECK(parity_of(q, 1e-12) == Parity::Even);
      CHECK(is_real_valued(q, 1e-12));
    }
  }
  CHECK_THROWS_AS(extremal_even(0, 1.0), DomainError);
  CHECK_THROWS_AS(extremal_even(1, 0.0), DomainError);
  CHECK_THROWS_AS(extremal_even(1, 2.0 * M_PI), DomainError);
}

TEST_CASE("extremal_even coefficients match trigonometric interpolation") {
  for (int n : {1, 2, 4, 6}) {
    for (double s : {0.7, M_PI, 4.9}) {
      TrigPoly q = extremal_even(n, s);
      double sec = 1.0 / std::cos(s / 4.0);
      auto reference = oracles::interpolate_coeffs(
          [&](double t) {
            return std::complex<double>{cheb_T(2 * n, std::cos(t / 2.0) * sec), 0.0};
          },
          n);
      double scale = q.max_coeff_abs();
      for (int k = -n; k <= n; ++k) {
        CHECK(std::abs(q.coeff(k) - reference[static_cast<std::size_t>(k + n)]) <= 1e-9 * scale);
      }
    }
  }
}

TEST_CASE("extremal_even attains the bound across the grid") {
  for (int n = 1; n <= 6; ++n) {
    for (double s = 0.5; s <= 5.5 + 1e-9; s += 0.5) {
      TrigPoly q = extremal_even(n, s);
      double ratio = sup_norm(q) / bound_even(n, s);
      CHECK(ratio >= 1.0 - 1e-8);
      CHECK(ratio <= 1.0 + 1e-8);
      CHECK(std::abs(deficiency(q) - s) <= 1e-6);
    }
  }
}

TEST_CASE("extremal_classical") {
  AlgPoly p1 = extremal_classical(1, 1.0);
  CHECK(p1.coeff(0).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p1.coeff(1).real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(eval(p1, 1.0).real() == doctest::Approx(3.0).epsilon(1e-12));

  AlgPoly p2 = extremal_classical(2, 1.0);
  CHECK(eval(p2, 1.0).real() == doctest::Approx(17.0).epsilon(1e-12));

  for (int n : {1, 2, 3, 4}) {
    for (double s : {0.3, 1.0, 1.7}) {
      AlgPoly p = extremal_classical(n, s);
      CHECK(std::abs(eval(p, 1.0 - s)) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(std::abs(eval(p, -1.0)) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(std::abs(eval(p, 1.0)) == doctest::Approx(bound_classical(n, s)).epsilon(1e-11));
      // Lebesgue measure of the unit sublevel inside [-1,1] is 2 - s.
      double measure = lebesgue(alg_sublevel(p, 1.0, -1.0, 1.0));
      CHECK(measure == doctest::Approx(2.0 - s).epsilon(1e-8));
    }
  }
  CHECK_THROWS_AS(extremal_classical(1, 2.5), DomainError);
}

TEST_CASE("equality_witness assembles and validates") {
  ExtremalWitness w = equality_witness(1, M_PI);
  CHECK(w.bound == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(w.attained_sup == doctest::Approx(3.0).epsilon(1e-9));
  REQUIRE(w.sublevel.arcs().size() == 1);
  CHECK(w.sublevel.arcs()[0].lo == doctest::Approx(M_PI / 2.0).epsilon(1e-8));
  CHECK(w.sublevel.arcs()[0].hi == doctest::Approx(3.0 * M_PI / 2.0).epsilon(1e-8));

  ExtremalWitness tight = equality_witness(3, 5.5);
  CHECK(tight.ratio >= 1.0 - 1e-8);
  CHECK(tight.ratio <= 1.0 + 1e-8);

  ExtremalWitness small = equality_witness(1, 0.1);
  CHECK(small.bound == doctest::Approx(1.0).epsilon(0.02));
  CHECK(small.sublevel_measure == doctest::Approx(2.0 * M_PI - 0.1).epsilon(1e-6));
}
