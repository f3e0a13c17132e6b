#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "bergman/funcspace.hpp"
#include "bergman/quad.hpp"
#include "bergman/special.hpp"

using namespace bergman;

TEST_CASE("gauss_jacobi01 weight sums and node location") {
  for (double gamma : {-0.9, -0.5, 0.0, 1.0, 1.75, 10.0}) {
    for (int n : {1, 4, 16, 80}) {
      const quad::RadialRule rule = quad::gauss_jacobi01(gamma, n);
      REQUIRE(rule.nodes.size() == n);
      double wsum = 0.0;
      for (int i = 0; i < n; ++i) {
        CHECK(rule.nodes[i] > 0.0);
        CHECK(rule.nodes[i] < 1.0);
        wsum += rule.weights[i];
      }
      CHECK(wsum ==
            doctest::Approx(1.0 / (gamma + 1.0)).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(quad::gauss_jacobi01(-1.0, 4), std::domain_error);
  CHECK_THROWS_AS(quad::gauss_jacobi01(0.0, 0), std::domain_error);
}

TEST_CASE("gauss_jacobi01 polynomial exactness up to degree 2n-1") {
  const double gamma = 1.3;
  const int n = 12;
  const quad::RadialRule rule = quad::gauss_jacobi01(gamma, n);
  for (int m = 0; m <= 2 * n - 1; ++m) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      sum += rule.weights[i] * std::pow(rule.nodes[i], m);
    }
    // int_0^1 t^m (1-t)^gamma dt = B(m+1, gamma+1)
    const double exact = special::beta_fn(m + 1.0, gamma + 1.0);
    CHECK(sum == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("disk_grid basic moments") {
  const quad::DiskGrid g0 = quad::disk_grid(0.0, 20, 64);
  CHECK(quad::integrate_disk(g0, [](Complex) { return 1.0; }) ==
        doctest::Approx(1.0).epsilon(1e-13));
  for (int n : {1, 2, 5, 9}) {
    CHECK(quad::integrate_disk(g0, [n](Complex z) {
            return std::pow(std::norm(z), n);
          }) == doctest::Approx(1.0 / (n + 1.0)).epsilon(1e-12));
  }
  for (double alpha : {-0.5, 0.0, 2.0}) {
    const quad::DiskGrid g = quad::disk_grid(alpha, 20, 64);
    CHECK(quad::integrate_disk(g, [](Complex) { return 1.0; }) ==
          doctest::Approx(1.0 / (alpha + 1.0)).epsilon(1e-13));
  }
  const quad::DiskGrid g1 = quad::disk_grid(1.0, 20, 64);
  CHECK(quad::integrate_disk(g1, [](Complex z) { return std::norm(z); }) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-13));
}

TEST_CASE("angular exactness of the trapezoid direction") {
  const quad::DiskGrid g = quad::disk_grid(0.0, 8, 32);
  for (int k = 1; k < 32; ++k) {
    const double v = quad::integrate_disk(g, [k](Complex z) {
      const double r = std::abs(z);
      return std::cos(k * std::arg(z)) / std::pow(r, 0);
    });
    CHECK(std::abs(v) < 1e-14);
  }
}

TEST_CASE("integrate_disk matches Parseval for polynomials") {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 5; ++trial) {
    CoeffVector c(7);
    for (int i = 0; i < 7; ++i) {
      c[i] = Complex(nd(gen), nd(gen));
    }
    const AnalyticFunction f = AnalyticFunction::polynomial(c);
    const quad::DiskGrid g = quad::disk_grid(0.0, 20, 64);
    const double byquad = quad::integrate_disk(
        g, [&](Complex z) { return std::norm(f.eval(z)); });
    double bycoeff = 0.0;
    for (int n = 0; n < 7; ++n) {
      bycoeff += std::norm(c[n]) / (n + 1.0);
    }
    CHECK(byquad == doctest::Approx(bycoeff).epsilon(1e-10));
  }
}

TEST_CASE("integrate_disk flags non-finite integrands naming the node") {
  const quad::DiskGrid g = quad::disk_grid(0.0, 4, 8);
  try {
    quad::integrate_disk(g, [](Complex) {
      return std::numeric_limits<double>::quiet_NaN();
    });
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("t=") != std::string::npos);
  }
}

TEST_CASE("circle_mean closed forms") {
  const AnalyticFunction one = AnalyticFunction::polynomial(
      (CoeffVector(1) << Complex(3.0, -4.0)).finished());
  for (double p : {1.0, 2.0, 3.7}) {
    for (double r : {0.2, 0.8, 1.0}) {
      CHECK(quad::circle_mean(one, p, r, 64) ==
            doctest::Approx(5.0).epsilon(1e-13));
    }
  }
  const AnalyticFunction fz = AnalyticFunction::polynomial(
      (CoeffVector(2) << 0.0, 1.0).finished());
  for (double p : {1.0, 2.5}) {
    CHECK(quad::circle_mean(fz, p, 0.6, 64) ==
          doctest::Approx(0.6).epsilon(1e-13));
  }
  const AnalyticFunction f1z = AnalyticFunction::polynomial(
      (CoeffVector(2) << 1.0, 1.0).finished());
  for (double r : {0.3, 0.9, 1.0}) {
    CHECK(quad::circle_mean(f1z, 2.0, r, 128) ==
          doctest::Approx(std::sqrt(1.0 + r * r)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(quad::circle_mean(fz, 2.0, 1.1, 64), std::domain_error);
}

TEST_CASE("circle_mean angular refinement stability") {
  const AnalyticFunction f = kernel(Complex(0.4, 0.3), 0.0);
  for (double p : {2.0, 3.5}) {
    const double a = quad::circle_mean(f, p, 0.9, 256);
    const double b = quad::circle_mean(f, p, 0.9, 512);
    CHECK(std::abs(a - b) < 1e-10 * a);
  }
}

TEST_CASE("double_exponential01 handles endpoint singularities") {
  const quad::DERule rule = quad::double_exponential01(80);
  double s1 = 0.0, st = 0.0, slog = 0.0, smix = 0.0;
  for (Eigen::Index i = 0; i < rule.t.size(); ++i) {
    const double t = rule.t[i];
    const double omt = rule.one_minus_t[i];
    const double w = rule.weights[i];
    CHECK(std::abs(t + omt - 1.0) < 1e-15);
    s1 += w;
    st += w * t * t * t;
    if (t > 0.0) {
      slog += w * std::log(1.0 / t);
      smix += w * std::pow(omt, 5.0) * std::log(1.0 / t);
    }
  }
  CHECK(s1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(st == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(slog == doctest::Approx(1.0).epsilon(1e-12));
  // int_0^1 (1-t)^5 log(1/t) dt = sum_j C(5,j)(-1)^j/(j+1)^2
  double exact = 0.0;
  const double binom[6] = {1, 5, 10, 10, 5, 1};
  for (int j = 0; j <= 5; ++j) {
    exact += binom[j] * ((j % 2) ? -1.0 : 1.0) / ((j + 1.0) * (j + 1.0));
  }
  CHECK(smix == doctest::Approx(exact).epsilon(1e-12));
  CHECK_THROWS_AS(quad::double_exponential01(4), std::domain_error);
}

TEST_CASE("double_exponential01 refinement halves the step") {
  const quad::DERule a = quad::double_exponential01(80);
  const quad::DERule b = quad::double_exponential01(160);
  CHECK(b.t.size() > a.t.size());
  // both integrate a generic smooth function identically to ~1e-14
  const auto apply = [](const quad::DERule& r) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < r.t.size(); ++i) {
      s += r.weights[i] * std::exp(-2.0 * r.t[i]) * std::cos(r.t[i]);
    }
    return s;
  };
  CHECK(apply(a) == doctest::Approx(apply(b)).epsilon(1e-13));
}
