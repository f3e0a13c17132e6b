#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "bergman/special.hpp"

using namespace bergman::special;

TEST_CASE("log_gamma basic values") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-13));
  CHECK(log_gamma(0.5) ==
        doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-13));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-3.0), std::domain_error);
}

TEST_CASE("log_gamma accuracy across the contract range") {
  // Gamma(x+1) = x Gamma(x) telescoped against exact factorials.
  double acc = 0.0;
  for (int n = 1; n <= 170; ++n) {
    acc += std::log(static_cast<double>(n));
    CHECK(log_gamma(n + 1.0) ==
          doctest::Approx(acc).epsilon(1e-13));
  }
  // Duplication formula at scattered points.
  for (double x : {1e-3, 0.02, 0.7, 3.3, 41.5, 987.0}) {
    const double lhs = log_gamma(2.0 * x);
    const double rhs = log_gamma(x) + log_gamma(x + 0.5) +
                       (2.0 * x - 1.0) * std::log(2.0) -
                       0.5 * std::log(std::numbers::pi);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("beta_fn values and symmetry") {
  CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_fn(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> ur(0.1, 50.0);
  for (int i = 0; i < 50; ++i) {
    const double x = ur(gen);
    const double y = ur(gen);
    CHECK(beta_fn(x, y) == doctest::Approx(beta_fn(y, x)).epsilon(1e-13));
  }
  // No overflow for large arguments.
  CHECK(std::isfinite(beta_fn(400.0, 250.0)));
  CHECK_THROWS_AS(beta_fn(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(beta_fn(1.0, -2.0), std::domain_error);
}

TEST_CASE("c_coeff closed-form cases") {
  for (int n = 0; n <= 200; ++n) {
    CHECK(c_coeff(1.0, n) == doctest::Approx(1.0).epsilon(1e-13));
  }
  CHECK(c_coeff(2.0, 3) == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(c_coeff(2.0, 1) == doctest::Approx(2.0).epsilon(1e-13));
  // Integer beta gives binomial numbers exactly within tolerance.
  CHECK(c_coeff(3.0, 4) == doctest::Approx(15.0).epsilon(1e-12));
  CHECK_THROWS_AS(c_coeff(0.0, 2), std::domain_error);
  CHECK_THROWS_AS(c_coeff(2.0, -1), std::domain_error);
}

TEST_CASE("c_coeff increasing in n for beta > 1") {
  for (double beta : {1.5, 2.0, 6.0, 20.0}) {
    double prev = c_coeff(beta, 0);
    CHECK(prev == doctest::Approx(1.0));
    for (int n = 1; n <= 100; ++n) {
      const double cur = c_coeff(beta, n);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("h_func boundary and closed-form values") {
  for (double p : {2.0, 3.0, 6.0}) {
    for (double alpha : {-1.0, 0.0, 1.5}) {
      CHECK(h_func(p, alpha, 0.0) ==
            doctest::Approx(1.0 / (alpha + 2.0)).epsilon(1e-13));
    }
  }
  // p=2, alpha=-1: H = int_0^1 ds/(1-ws) / ... = -log(1-w)/w.
  CHECK(h_func(2.0, -1.0, 0.5) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(h_func(2.0, -1.0, 0.9) ==
        doctest::Approx(-std::log(0.1) / 0.9).epsilon(1e-13));
  CHECK_THROWS_AS(h_func(2.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(h_func(2.0, 0.0, -0.1), std::domain_error);
  CHECK_THROWS_AS(h_func(1.5, 0.0, 0.3), std::domain_error);
}

TEST_CASE("h_func frozen high-precision values") {
  // Extended-precision series evaluations, frozen.
  CHECK(h_func(2.0, 1.0, 0.9) ==
        doctest::Approx(1.36842948284506).epsilon(5e-13));
  CHECK(h_func(4.0, 1.0, 0.9) ==
        doctest::Approx(1.77804156244643).epsilon(5e-13));
  CHECK(h_func(4.0, 1.0, 0.99) ==
        doctest::Approx(5.0374724841874).epsilon(5e-13));
  CHECK(h_func(7.3, 1.0, 0.999) ==
        doctest::Approx(14.7367856904227).epsilon(5e-13));
}

TEST_CASE("h_func branch agreement at the series/quadrature seam") {
  for (double p : {2.0, 3.0, 5.0, 8.0}) {
    for (double alpha : {-1.0, 0.0, 2.0}) {
      const double below = h_func(p, alpha, 0.5);
      const double above = h_func(p, alpha, 0.5 + 1e-12);
      CHECK(std::abs(above - below) < 1e-10 * below);
    }
  }
}

TEST_CASE("h_func monotone and concave in p") {
  for (double alpha : {-1.0, -0.5, 0.0, 1.0}) {
    for (double w : {0.0, 0.1, 0.5, 0.9, 0.99}) {
      double prev = h_func(2.0, alpha, w);
      std::vector<double> vals{prev};
      for (double p = 2.5; p <= 10.0 + 1e-9; p += 0.5) {
        const double cur = h_func(p, alpha, w);
        CHECK(cur >= prev - 1e-12);
        vals.push_back(cur);
        prev = cur;
      }
      for (std::size_t i = 1; i + 1 < vals.size(); ++i) {
        const double second = vals[i - 1] - 2.0 * vals[i] + vals[i + 1];
        CHECK(second <= 1e-10);
      }
    }
  }
}

TEST_CASE("h_func_dp2 values and finite-difference oracle") {
  CHECK(h_func_dp2(0.0, 0.0) == 0.0);
  for (double alpha : {-1.0, 0.0, 1.0}) {
    for (double w : {0.1, 0.5, 0.9}) {
      // one-sided second-order difference: p < 2 is outside the domain
      const double h = 1e-5;
      const double fd = (-3.0 * h_func(2.0, alpha, w) +
                         4.0 * h_func(2.0 + h, alpha, w) -
                         h_func(2.0 + 2.0 * h, alpha, w)) /
                        (2.0 * h);
      CHECK(h_func_dp2(alpha, w) == doctest::Approx(fd).epsilon(1e-8));
    }
  }
  const double near1 = h_func_dp2(0.0, 0.99);
  CHECK(std::isfinite(near1));
  CHECK(near1 > 0.0);
  CHECK_THROWS_AS(h_func_dp2(0.0, 1.0), std::domain_error);
}

TEST_CASE("beta-binomial identity") {
  {
    const IdentityPair id = beta_binom_identity(1, 1, -1.0);
    CHECK(id.rhs == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(id.lhs == doctest::Approx(id.rhs).epsilon(1e-12));
  }
  for (double alpha : {-1.0, 0.0, 0.5, 2.0}) {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 1; n <= 50; ++n) {
        const IdentityPair id = beta_binom_identity(n, k, alpha);
        CHECK(std::abs(id.lhs - id.rhs) < 1e-12 * std::abs(id.rhs));
      }
    }
  }
  CHECK_THROWS_AS(beta_binom_identity(0, 1, 0.0), std::domain_error);
}

TEST_CASE("coefficient convolution identity") {
  {
    const IdentityPair id = c_convolution_identity(0, 1, 0.0);
    CHECK(id.lhs == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(id.rhs == doctest::Approx(1.0).epsilon(1e-14));
  }
  {
    // c_2 * c_2 convolved at n=2: 1*3 + 2*2 + 3*1 = 10 = c_4(2).
    const IdentityPair id = c_convolution_identity(2, 1, 0.0);
    CHECK(id.lhs == doctest::Approx(10.0).epsilon(1e-13));
    CHECK(id.rhs == doctest::Approx(10.0).epsilon(1e-13));
  }
  for (double alpha : {-1.0, 0.0, 0.5, 2.0}) {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= 100; ++n) {
        const IdentityPair id = c_convolution_identity(n, k, alpha);
        CHECK(std::abs(id.lhs - id.rhs) < 1e-12 * std::abs(id.rhs));
      }
    }
  }
}

TEST_CASE("Chebyshev correlation inequality on discrete measures") {
  // f increasing, g decreasing, mu a probability measure on the pieces:
  // sum f g mu <= (sum f mu)(sum g mu).
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> ur(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + static_cast<int>(ur(gen) * 30);
    std::vector<double> f(m), g(m), mu(m);
    double fs = 0.0, gs = 0.0, total = 0.0;
    for (int i = 0; i < m; ++i) {
      fs += ur(gen);
      gs += ur(gen);
      f[i] = fs;
      g[i] = -gs;
      mu[i] = ur(gen) + 1e-3;
      total += mu[i];
    }
    double efg = 0.0, ef = 0.0, eg = 0.0;
    for (int i = 0; i < m; ++i) {
      const double w = mu[i] / total;
      efg += f[i] * g[i] * w;
      ef += f[i] * w;
      eg += g[i] * w;
    }
    CHECK(efg <= ef * eg + 1e-12 * (1.0 + std::abs(ef * eg)));
  }
}
