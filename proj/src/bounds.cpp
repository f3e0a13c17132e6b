#include "bergman/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman::bounds {

namespace {

int interval_index(double p) {
  // Unique k with 2(k-1) < p <= 2k; at even p the smaller k applies,
  // making C(2k) = 1 exact.
  int k = static_cast<int>(std::ceil(0.5 * p));
  if (2.0 * (k - 1) >= p) {
    --k;
  }
  return k;
}

double source_norm(const AnalyticFunction& f, double alpha) {
  return norms::a2_coeff_norm(f, alpha).value;
}

}  // namespace

BoundCurvePoint c_bound(double p) {
  if (!(p > 2.0)) {
    throw std::domain_error("c_bound: p must be > 2");
  }
  const int k = interval_index(p);
  const double logc = std::log(0.5 * p) / p -
                      (static_cast<double>(k) / p - 0.5) * std::log(k - 1.0) -
                      (0.5 - (k - 1.0) / p) * std::log(static_cast<double>(k));
  return {p, k, std::exp(logc)};
}

double c_max_location(int k) {
  if (k < 2) {
    throw std::domain_error("c_max_location: k must be >= 2");
  }
  // 2e (k-1)^k / k^{k-1}, in log space.
  return std::exp(std::log(2.0) + 1.0 + k * std::log(k - 1.0) -
                  (k - 1.0) * std::log(static_cast<double>(k)));
}

double envelope(double x) {
  if (!(x > 1.0)) {
    throw std::domain_error("envelope: x must be > 1");
  }
  // x^{x-1} / (x-1)^x overflows near x ~ 700 if formed directly.
  const double log_tower = (x - 1.0) * std::log(x) - x * std::log(x - 1.0);
  return std::sqrt((x - 1.0) / x) *
         std::exp(std::exp(log_tower - 1.0 - std::log(2.0)));
}

double uniform_bound() { return envelope(2.0); }

double bayart_beta_threshold() { return 0.25 * (std::sqrt(17.0) - 7.0); }

double inclusion_ratio(const AnalyticFunction& f, double alpha, double p,
                       const norms::GridOptions& opt) {
  if (!(p > 2.0)) {
    throw std::domain_error("inclusion_ratio: p must be > 2");
  }
  if (!(alpha >= -1.0)) {
    throw std::domain_error("inclusion_ratio: alpha must be >= -1");
  }
  const double src = source_norm(f, alpha);
  if (src < 1e-12) {
    throw std::domain_error("inclusion_ratio: source norm below 1e-12");
  }
  const SpaceParams target{0.5 * p * (alpha + 2.0) - 2.0, p};
  return norms::bergman_norm(f, target, opt).value / src;
}

double bayart_step_ratio(const AnalyticFunction& f, double p, double beta,
                         const norms::GridOptions& opt) {
  if (!(p > 0.0)) {
    throw std::domain_error("bayart_step_ratio: p must be positive");
  }
  if (!(beta > bayart_beta_threshold())) {
    throw std::domain_error(
        "bayart_step_ratio: beta must exceed (sqrt(17)-7)/4");
  }
  const double q = p * (beta + 3.0) / (beta + 2.0);
  const double denom =
      beta == -1.0 ? norms::hardy_norm(f, p, opt).value
                   : norms::bergman_norm(f, SpaceParams{beta, p}, opt).value;
  if (denom < 1e-12) {
    throw std::domain_error("bayart_step_ratio: source norm below 1e-12");
  }
  return norms::bergman_norm(f, SpaceParams{beta + 1.0, q}, opt).value /
         denom;
}

std::vector<BoundCurvePoint> bound_curve(double p_min, double p_max,
                                         double step) {
  if (!(p_min > 2.0) || !(p_max > p_min) || !(step > 0.0)) {
    throw std::domain_error("bound_curve: need 2 < p_min < p_max, step > 0");
  }
  std::vector<BoundCurvePoint> out;
  const auto count = static_cast<long>((p_max - p_min) / step + 1e-9);
  out.reserve(count + 1);
  for (long i = 0; i <= count; ++i) {
    out.push_back(c_bound(p_min + i * step));
  }
  return out;
}

}  // namespace bergman::bounds
