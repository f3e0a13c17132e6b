#ifndef BERGMAN_BOUNDS_HPP_
#define BERGMAN_BOUNDS_HPP_

#include <vector>

#include "bergman/norms.hpp"

namespace bergman::bounds {

/// One sample of the explicit inclusion-norm bound C(p); k is the unique
/// integer with 2(k-1) < p <= 2k.
struct BoundCurvePoint {
  double p;
  int k;
  double c_value;
};

/// C(p) = (p/2)^{1/p} (k-1)^{-(k/p - 1/2)} k^{-(1/2 - (k-1)/p)}, p > 2.
BoundCurvePoint c_bound(double p);

/// Interior maximizer of C on (2(k-1), 2k]: p = 2e (k-1)^k / k^{k-1}.
double c_max_location(int k);

/// Decreasing envelope sqrt((x-1)/x) exp(x^{x-1} / (2e (x-1)^x)), x > 1.
double envelope(double x);

/// e^{1/e} / sqrt(2) = envelope(2), the uniform bound over all p > 2.
double uniform_bound();

/// (sqrt(17) - 7) / 4, the admissibility threshold for bayart_step_ratio.
double bayart_beta_threshold();

/// ||f||_{A^p_{p(alpha+2)/2 - 2}} / ||f||_{A^2_alpha}; conjectured <= 1,
/// guaranteed <= C(p).
double inclusion_ratio(const AnalyticFunction& f, double alpha, double p,
                       const norms::GridOptions& opt = {});

/// ||f||_{A^{p(beta+3)/(beta+2)}_{beta+1}} / ||f||_{A^p_beta}.
double bayart_step_ratio(const AnalyticFunction& f, double p, double beta,
                         const norms::GridOptions& opt = {});

/// Samples C on [p_min, p_max] at the given step, for CSV emission.
std::vector<BoundCurvePoint> bound_curve(double p_min, double p_max,
                                         double step);

}  // namespace bergman::bounds

#endif  // BERGMAN_BOUNDS_HPP_
