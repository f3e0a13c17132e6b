#ifndef BERGMAN_NORMS_HPP_
#define BERGMAN_NORMS_HPP_

#include "bergman/funcspace.hpp"
#include "bergman/quad.hpp"

namespace bergman::norms {

enum class Method { coefficient, quadrature, hardy_stein };

struct GridOptions {
  int n_rad = 80;
  int n_angles = 256;
  /// Recompute on a doubled grid and record the difference.
  bool check_refinement = false;
};

struct NormReport {
  double value = 0.0;
  SpaceParams space{0.0, 2.0};
  Method method = Method::quadrature;
  int n_rad = 0;
  int n_angles = 0;
  int series_len = 0;
  double refinement_delta = 0.0;
};

/// ((alpha+1) int_D (1-|z|^2)^alpha |f|^p dA)^{1/p}, alpha > -1.
NormReport bergman_norm(const AnalyticFunction& f, SpaceParams space,
                        const GridOptions& opt = {});

/// sup_r M_p(r, f) = M_p(1, f) for boundary-continuous f.
NormReport hardy_norm(const AnalyticFunction& f, double p,
                      const GridOptions& opt = {});

/// A^2_alpha norm from the coefficient series sum |a_n|^2 / c_{alpha+2}(n);
/// alpha = -1 gives the H^2 (Parseval) norm.
NormReport a2_coeff_norm(const AnalyticFunction& f, double alpha);

/// Target-space norm through the Hardy-Stein-derived expansion
///   ||f||^p = |f(0)|^p
///     + (p/2) int_D |f'|^2 |f|^{p-2} (1-|z|^2)^{p(alpha+2)/2} H(p,z) dA.
NormReport hs_norm(const AnalyticFunction& f, double alpha, double p,
                   const GridOptions& opt = {});

/// F_p(f): same integral with H(2,z) in place of H(p,z).
double functional_F(const AnalyticFunction& f, double alpha, double p,
                    const GridOptions& opt = {});

/// G_p(f) = p/(2(alpha+2)) int_D |f'|^2 |f|^{p-2} (1-|z|^2)^{p(alpha+2)/2} dA.
double functional_G(const AnalyticFunction& f, double alpha, double p,
                    const GridOptions& opt = {});

/// d/dr M_p^p(r,f) minus (p^2/2r) int_{rD} |f'|^2 |f|^{p-2} dA; the left side
/// by Richardson-checked central differences.
double hardy_stein_residual(const AnalyticFunction& f, double p, double r,
                            const GridOptions& opt = {});

/// ||f|| - |f(z)| (1-|z|^2)^{(alpha+2)/p}; nonnegative up to tolerance.
double point_bound_margin(const AnalyticFunction& f, SpaceParams space,
                          Complex z, const GridOptions& opt = {});

/// |f|^{p-2} with the 0 * inf guard at zeros of f.
inline double abs_pow(double absf, double expo) {
  if (absf < 1e-300) {
    return expo > 0.0 ? 0.0 : 1.0;
  }
  return std::pow(absf, expo);
}

}  // namespace bergman::norms

#endif  // BERGMAN_NORMS_HPP_
