#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "bergman/bounds.hpp"

using namespace bergman;

TEST_CASE("c_bound closed forms") {
  for (int k = 2; k <= 5; ++k) {
    const bounds::BoundCurvePoint pt = bounds::c_bound(2.0 * k);
    CHECK(pt.k == k);
    CHECK(pt.c_value == doctest::Approx(1.0).epsilon(1e-14));
  }
  // p = 3, k = 2: (3/2)^{1/3} 1^{-1/6} 2^{-(1/2 - 1/3)} = (3/2)^{1/3} 2^{-1/6}
  const bounds::BoundCurvePoint p3 = bounds::c_bound(3.0);
  CHECK(p3.k == 2);
  CHECK(p3.c_value ==
        doctest::Approx(std::cbrt(1.5) * std::pow(2.0, -1.0 / 6.0))
            .epsilon(1e-14));
  // Right-continuity break: just above an even integer the bound jumps up.
  for (int k = 2; k <= 4; ++k) {
    const double above = bounds::c_bound(2.0 * k + 1e-9).c_value;
    CHECK(above > 1.0);
    CHECK(above < 1.001);
  }
  CHECK_THROWS_AS(bounds::c_bound(2.0), std::domain_error);
  CHECK_THROWS_AS(bounds::c_bound(1.0), std::domain_error);
}

TEST_CASE("c_max_location") {
  CHECK(bounds::c_max_location(2) ==
        doctest::Approx(std::numbers::e).epsilon(1e-14));
  CHECK(bounds::c_max_location(3) ==
        doctest::Approx(2.0 * std::numbers::e * 8.0 / 9.0).epsilon(1e-14));
  for (int k = 2; k <= 6; ++k) {
    const double pk = bounds::c_max_location(k);
    CHECK(pk > 2.0 * (k - 1));
    CHECK(pk < 2.0 * k);
    // local max: neighbors on the same interval are below
    const double at = bounds::c_bound(pk).c_value;
    CHECK(bounds::c_bound(pk - 1e-4).c_value < at);
    CHECK(bounds::c_bound(pk + 1e-4).c_value < at);
  }
  CHECK_THROWS_AS(bounds::c_max_location(1), std::domain_error);
}

TEST_CASE("envelope and uniform bound") {
  const double e = std::numbers::e;
  CHECK(bounds::envelope(2.0) ==
        doctest::Approx(std::pow(e, 1.0 / e) / std::sqrt(2.0))
            .epsilon(1e-14));
  CHECK(bounds::uniform_bound() ==
        doctest::Approx(bounds::envelope(2.0)).epsilon(1e-15));
  CHECK(bounds::uniform_bound() == doctest::Approx(1.02153).epsilon(5e-5));
  double prev = bounds::envelope(1.5);
  for (double x = 1.6; x <= 60.0; x += 0.7) {
    const double cur = bounds::envelope(x);
    CHECK(cur < prev);
    CHECK(cur > 1.0);
    prev = cur;
  }
  CHECK(std::isfinite(bounds::envelope(700.0)));
  CHECK(bounds::envelope(700.0) > 1.0);
  CHECK_THROWS_AS(bounds::envelope(1.0), std::domain_error);
  // envelope(k) dominates the interval maximum C(p_k) on (2(k-1), 2k]
  for (int k = 2; k <= 6; ++k) {
    const double interval_max =
        bounds::c_bound(bounds::c_max_location(k)).c_value;
    CHECK(bounds::envelope(static_cast<double>(k)) >= interval_max - 1e-13);
  }
}

TEST_CASE("bayart threshold") {
  CHECK(bounds::bayart_beta_threshold() ==
        doctest::Approx((std::sqrt(17.0) - 7.0) / 4.0).epsilon(1e-15));
}

TEST_CASE("inclusion_ratio on kernels and polynomials") {
  for (double alpha : {-1.0, 0.0}) {
    for (double p : {3.0, 4.0}) {
      for (double z : {0.0, 0.5, 0.9}) {
        const double r =
            bounds::inclusion_ratio(normalized_kernel(z, alpha), alpha, p);
        CHECK(r == doctest::Approx(1.0).epsilon(1e-6));
      }
    }
  }
  std::mt19937_64 gen(11);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 10; ++trial) {
    CoeffVector c(8);
    for (int i = 0; i < 8; ++i) {
      c[i] = Complex(nd(gen), nd(gen));
    }
    const AnalyticFunction f = AnalyticFunction::polynomial(c);
    for (double p : {2.5, 4.0, 6.0}) {
      const double r = bounds::inclusion_ratio(f, 0.0, p);
      CHECK(r <= 1.0 + 1e-9);
      CHECK(r <= bounds::c_bound(p).c_value * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("bayart_step_ratio contractivity and extremal family") {
  std::mt19937_64 gen(12);
  std::normal_distribution<double> nd;
  const double pairs[3][2] = {{2.0, 0.0}, {2.0, 1.0}, {3.0, 0.5}};
  for (const auto& pb : pairs) {
    const double p = pb[0];
    const double beta = pb[1];
    for (int trial = 0; trial < 10; ++trial) {
      CoeffVector c(9);
      for (int i = 0; i < 9; ++i) {
        c[i] = Complex(nd(gen), nd(gen));
      }
      const AnalyticFunction f = AnalyticFunction::polynomial(c);
      CHECK(bounds::bayart_step_ratio(f, p, beta) <= 1.0 + 1e-9);
    }
    // extremal family c (1 - conj(zeta) z)^{-2(beta+2)/p}
    const AnalyticFunction g =
        AnalyticFunction::kernel_raw(0.4, 2.0 * (beta + 2.0) / p, 1.3);
    CHECK(bounds::bayart_step_ratio(g, p, beta) ==
          doctest::Approx(1.0).epsilon(1e-6));
  }
  const AnalyticFunction one = AnalyticFunction::polynomial(
      (CoeffVector(1) << 1.0).finished());
  CHECK_THROWS_AS(
      bounds::bayart_step_ratio(one, 2.0,
                                bounds::bayart_beta_threshold() - 1e-3),
      std::domain_error);
}

TEST_CASE("bound_curve sampling") {
  const auto curve = bounds::bound_curve(2.1, 6.0, 0.1);
  REQUIRE(!curve.empty());
  CHECK(curve.front().p == doctest::Approx(2.1));
  CHECK(curve.back().p == doctest::Approx(6.0).epsilon(1e-9));
  for (const auto& pt : curve) {
    CHECK(pt.c_value ==
          doctest::Approx(bounds::c_bound(pt.p).c_value).epsilon(1e-14));
    CHECK(pt.k == bounds::c_bound(pt.p).k);
    CHECK(pt.c_value <= bounds::uniform_bound() + 1e-12);
  }
  CHECK_THROWS_AS(bounds::bound_curve(3.0, 2.5, 0.1), std::domain_error);
  CHECK_THROWS_AS(bounds::bound_curve(2.1, 3.0, 0.0), std::domain_error);
}
