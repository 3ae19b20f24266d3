#include <doctest.h>

#include <cmath>

#include "remezlab/audit.hpp"
#include "remezlab/errors.hpp"
#include "remezlab/extremal.hpp"
#include "remezlab/parallel.hpp"
#include "remezlab/sublevel.hpp"

using namespace remezlab;

namespace {

TrigPoly two_cos() {
  TrigPoly q(1);
  q.set_coeff(1, 1.0);
  q.set_coeff(-1, 1.0);
  return q;
}

TrigPoly random_poly(int n, Rng& rng) {
  TrigPoly q(n);
  for (int k = -n; k <= n; ++k) q.set_coeff(k, Complex{rng.gauss(), rng.gauss()});
  return q;
}

}  // namespace

TEST_CASE("sublevel of 2cos t at level 1") {
  for (SublevelBackend backend : {SublevelBackend::Eigen, SublevelBackend::Sample}) {
    CircleIntervalSet s = sublevel_set(two_cos(), 1.0, backend);
    REQUIRE(s.arcs().size() == 2);
    CHECK(s.arcs()[0].lo == doctest::Approx(M_PI / 3.0).epsilon(1e-10));
    CHECK(s.arcs()[0].hi == doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-10));
    CHECK(s.arcs()[1].lo == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-10));
    CHECK(s.arcs()[1].hi == doctest::Approx(5.0 * M_PI / 3.0).epsilon(1e-10));
    CHECK(lebesgue(s) == doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-10));
  }
}

TEST_CASE("sublevel of a small constant is the full circle") {
  TrigPoly half(2);
  half.set_coeff(0, 0.5);
  for (SublevelBackend backend : {SublevelBackend::Eigen, SublevelBackend::Sample}) {
    CircleIntervalSet s = sublevel_set(half, 1.0, backend);
    CHECK(s.is_full());
    CHECK(lebesgue(s) == doctest::Approx(2.0 * M_PI));
  }
}

TEST_CASE("sublevel of a large constant-modulus polynomial is empty") {
  TrigPoly big(1);
  big.set_coeff(1, 3.0);
  for (SublevelBackend backend : {SublevelBackend::Eigen, SublevelBackend::Sample}) {
    CHECK(sublevel_set(big, 1.0, backend).is_empty());
  }
}

TEST_CASE("tangential-everywhere input is the degenerate error") {
  TrigPoly unit(1);
  unit.set_coeff(1, 1.0);  // |e^{it}| == 1 everywhere
  CHECK_THROWS_AS(sublevel_set(unit, 1.0, SublevelBackend::Eigen), ConstantOnLevelError);
  CHECK_THROWS_AS(sublevel_set(unit, 1.0, SublevelBackend::Sample), ConstantOnLevelError);
  CHECK_THROWS_AS(sublevel_set(TrigPoly(2), 1.0), DomainError);  // zero polynomial
}

TEST_CASE("extremal sublevel is the single arc [s/2, 2pi - s/2]") {
  for (int n : {1, 2, 4}) {
    for (double s : {0.8, M_PI, 5.0}) {
      TrigPoly q = extremal_even(n, s);
      for (SublevelBackend backend : {SublevelBackend::Eigen, SublevelBackend::Sample}) {
        CircleIntervalSet set = sublevel_set(q, 1.0, backend);
        REQUIRE(set.arcs().size() == 1);
        CHECK(set.arcs()[0].lo == doctest::Approx(s / 2.0).epsilon(1e-7));
        CHECK(set.arcs()[0].hi == doctest::Approx(2.0 * M_PI - s / 2.0).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("deficiency values") {
  TrigPoly cosine(1);
  cosine.set_coeff(1, 0.5);
  cosine.set_coeff(-1, 0.5);
  CHECK(std::abs(deficiency(cosine)) <= 1e-9);
  CHECK(deficiency(two_cos()) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-10));
  CHECK(std::abs(deficiency(extremal_even(3, 2.5)) - 2.5) <= 1e-6);
}

TEST_CASE("membership consistency of returned arcs") {
  Rng rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 1 + static_cast<int>(rng.uniform_int(0, 5));
    TrigPoly q = random_poly(n, rng);
    double level = rng.uniform(0.3, 2.0);
    for (SublevelBackend backend : {SublevelBackend::Eigen, SublevelBackend::Sample}) {
      CircleIntervalSet s = sublevel_set(q, level, backend);
      const auto& arcs = s.arcs();
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        double mid = 0.5 * (arcs[i].lo + arcs[i].hi);
        CHECK(std::abs(eval(q, mid)) <= level * (1.0 + 1e-9));
        double gap_hi = (i + 1 < arcs.size()) ? arcs[i + 1].lo : arcs[0].lo + 2.0 * M_PI;
        if (gap_hi - arcs[i].hi > 1e-9) {
          double gap_mid = 0.5 * (arcs[i].hi + gap_hi);
          CHECK(std::abs(eval(q, gap_mid)) > level * (1.0 - 1e-9));
        }
      }
    }
  }
}

TEST_CASE("backend agreement on random polynomials") {
  Rng rng(32);
  for (int rep = 0; rep < 100; ++rep) {
    int n = 1 + static_cast<int>(rng.uniform_int(0, 7));
    TrigPoly q = random_poly(n, rng);
    CircleIntervalSet a = sublevel_set(q, 1.0, SublevelBackend::Eigen);
    CircleIntervalSet b = sublevel_set(q, 1.0, SublevelBackend::Sample);
    REQUIRE(a.arcs().size() == b.arcs().size());
    for (std::size_t i = 0; i < a.arcs().size(); ++i) {
      CHECK(std::abs(a.arcs()[i].lo - b.arcs()[i].lo) <= 1e-7);
      CHECK(std::abs(a.arcs()[i].hi - b.arcs()[i].hi) <= 1e-7);
    }
  }
}

TEST_CASE("scaling monotonicity of deficiency") {
  Rng rng(33);
  for (int rep = 0; rep < 25; ++rep) {
    int n = 1 + static_cast<int>(rng.uniform_int(0, 4));
    TrigPoly q = random_poly(n, rng);
    LevelScanner scan(q);
    double prev = 2.0 * M_PI + 1.0;
    for (double lambda = 0.2; lambda <= 3.0; lambda += 0.1) {
      double cur = scan.deficiency_at(lambda);
      CHECK(cur <= prev + 1e-9);
      prev = cur;
    }
  }
}

TEST_CASE("LevelScanner matches sublevel_set at level 1") {
  Rng rng(34);
  for (int rep = 0; rep < 20; ++rep) {
    TrigPoly q = random_poly(3, rng);
    CHECK(LevelScanner(q).deficiency_at(1.0) ==
          doctest::Approx(deficiency(q, SublevelBackend::Sample)).epsilon(1e-12));
  }
}

TEST_CASE("alg_sublevel on simple polynomials") {
  AlgPoly twox(std::vector<Complex>{Complex{0.0, 0.0}, Complex{2.0, 0.0}});
  LineIntervalSet s = alg_sublevel(twox, 1.0, -1.0, 1.0);
  REQUIRE(s.parts().size() == 1);
  CHECK(s.parts()[0].lo == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(s.parts()[0].hi == doctest::Approx(0.5).epsilon(1e-10));

  AlgPoly tiny(std::vector<Complex>{Complex{0.25, 0.0}});
  CHECK(lebesgue(alg_sublevel(tiny, 1.0, -1.0, 1.0)) == doctest::Approx(2.0));
}

TEST_CASE("pushforward_check examples") {
  TrigPoly cosine(1);
  cosine.set_coeff(1, 0.5);
  cosine.set_coeff(-1, 0.5);
  auto [mu_cos, half_cos] = pushforward_check(cosine);
  CHECK(mu_cos == doctest::Approx(M_PI).epsilon(1e-9));
  CHECK(half_cos == doctest::Approx(M_PI).epsilon(1e-9));

  auto [mu_ext, half_ext] = pushforward_check(extremal_even(1, M_PI));
  CHECK(mu_ext == doctest::Approx(M_PI / 2.0).epsilon(1e-9));
  CHECK(half_ext == doctest::Approx(M_PI / 2.0).epsilon(1e-9));

  auto [mu_two, half_two] = pushforward_check(two_cos());
  CHECK(mu_two == doctest::Approx(M_PI / 3.0).epsilon(1e-9));
  CHECK(half_two == doctest::Approx(M_PI / 3.0).epsilon(1e-9));

  TrigPoly sine(1);
  sine.set_coeff(1, Complex{0.0, -0.5});
  sine.set_coeff(-1, Complex{0.0, 0.5});
  CHECK_THROWS_AS(pushforward_check(sine), NotEvenError);
}

TEST_CASE("pushforward agreement on random even polynomials") {
  Rng rng(35);
  int done = 0;
  for (int rep = 0; rep < 60 && done < 25; ++rep) {
    int n = 1 + static_cast<int>(rng.uniform_int(0, 5));
    TrigPoly q(n);
    for (int k = 0; k <= n; ++k) {
      Complex c{rng.gauss(), rng.gauss()};
      q.set_coeff(k, c);
      q.set_coeff(-k, c);
    }
    auto [mu, half] = pushforward_check(q);
    CHECK(std::abs(mu - half) <= 1e-6);
    ++done;
  }
}
