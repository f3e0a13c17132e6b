#include "bergman/special.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "bergman/quad.hpp"

namespace bergman::special {

namespace {

// Jacobi rules keyed by the endpoint exponent; h_func is called once per
// radial node with a fixed exponent, so the cache stays tiny.
const quad::RadialRule& h_func_rule(double gamma) {
  thread_local std::map<double, quad::RadialRule> cache;
  auto it = cache.find(gamma);
  if (it == cache.end()) {
    it = cache.emplace(gamma, quad::gauss_jacobi01(gamma, 48)).first;
  }
  return it->second;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive");
  }
  return std::lgamma(x);
}

double beta_fn(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw std::domain_error("beta_fn: arguments must be positive");
  }
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

double c_coeff(double beta, int n) {
  if (!(beta > 0.0)) {
    throw std::domain_error("c_coeff: beta must be positive");
  }
  if (n < 0) {
    throw std::domain_error("c_coeff: n must be nonnegative");
  }
  if (n == 0) {
    return 1.0;
  }
  return std::exp(log_gamma(n + beta) - log_gamma(beta) -
                  log_gamma(static_cast<double>(n) + 1.0));
}

double h_func(double p, double alpha, double w) {
  if (!(p >= 2.0)) {
    throw std::domain_error("h_func: p must be >= 2");
  }
  if (!(alpha >= -1.0)) {
    throw std::domain_error("h_func: alpha must be >= -1");
  }
  if (!(w >= 0.0) || !(w < 1.0)) {
    throw std::domain_error("h_func: w must lie in [0, 1)");
  }
  const double c = 0.5 * p * (alpha + 2.0);
  if (w <= 0.5) {
    // Geometric-type series, converges at worst like 2^-n here.
    double sum = 0.0;
    double comp = 0.0;
    double wn = 1.0;
    for (int n = 0; n < 400; ++n) {
      const double term = wn / (n + c);
      const double t = sum + term;
      comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term
                                                : (term - t) + sum;
      sum = t;
      if (term < 1e-17 * sum) {
        break;
      }
      wn *= w;
    }
    return 0.5 * p * (sum + comp);
  }
  // sum_n w^n/(n+c) = integral_0^1 u^{c-1}/(1 - wu) du. The substitution
  // 1 - wu = e^{-y} removes the boundary layer at u = 1:
  //   = w^{-c} integral_0^Y (1 - e^{-y})^{c-1} dy,  Y = -log(1 - w).
  // Writing (1 - e^{-y})^{c-1} = y^{c-1} g(y) with g smooth, the remaining
  // endpoint power is absorbed by a Jacobi-weighted rule in t = 1 - y/Y.
  const double bigy = -std::log1p(-w);
  const auto g_smooth = [c](double y) {
    const double ratio = y < 1e-8 ? 1.0 - 0.5 * y : -std::expm1(-y) / y;
    return std::pow(ratio, c - 1.0);
  };
  const quad::RadialRule& rule = h_func_rule(c - 1.0);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * g_smooth(bigy * (1.0 - rule.nodes[i]));
  }
  const double value = std::exp(c * (std::log(bigy) - std::log(w))) * acc;
  return 0.5 * p * value;
}

double h_func_dp2(double alpha, double w) {
  if (!(alpha >= -1.0)) {
    throw std::domain_error("h_func_dp2: alpha must be >= -1");
  }
  if (!(w >= 0.0) || !(w < 1.0)) {
    throw std::domain_error("h_func_dp2: w must lie in [0, 1)");
  }
  if (w == 0.0) {
    return 0.0;
  }
  const double a2 = alpha + 2.0;
  double sum = 0.0;
  double comp = 0.0;
  double wn = w;
  for (long n = 1; n < 100000000L; ++n) {
    const double d = n + a2;
    const double term = n * wn / (d * d);
    const double t = sum + term;
    comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term
                                              : (term - t) + sum;
    sum = t;
    // Tail bound: sum_{m>n} m w^m/(m+a2)^2 <= w^{n+1}/((n+1)(1-w)) * (n+1)
    //           <= w^{n+1}/(1-w).
    if (wn * w / (1.0 - w) < 1e-13 * sum) {
      break;
    }
    wn *= w;
  }
  return 0.5 * (sum + comp);
}

IdentityPair beta_binom_identity(int n, int k, double alpha) {
  if (n < 1 || k < 1) {
    throw std::domain_error("beta_binom_identity: n, k must be >= 1");
  }
  if (!(alpha >= -1.0)) {
    throw std::domain_error("beta_binom_identity: alpha must be >= -1");
  }
  const double b = (k + 1) * (alpha + 2.0);
  const double nn = static_cast<double>(n);
  const double lhs =
      nn * nn * beta_fn(nn, b + 1.0) / b * c_coeff(b, n);
  const double rhs = nn / (nn + b);
  return {lhs, rhs};
}

IdentityPair c_convolution_identity(int n, int k, double alpha) {
  if (n < 0 || k < 1) {
    throw std::domain_error("c_convolution_identity: need n >= 0, k >= 1");
  }
  if (!(alpha >= -1.0)) {
    throw std::domain_error("c_convolution_identity: alpha must be >= -1");
  }
  const double b1 = alpha + 2.0;
  const double b2 = k * (alpha + 2.0);
  double sum = 0.0;
  double comp = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double term = c_coeff(b1, j) * c_coeff(b2, n - j);
    const double t = sum + term;
    comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term
                                              : (term - t) + sum;
    sum = t;
  }
  return {sum + comp, c_coeff(b1 + b2, n)};
}

}  // namespace bergman::special
