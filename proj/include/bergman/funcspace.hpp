#ifndef BERGMAN_FUNCSPACE_HPP_
#define BERGMAN_FUNCSPACE_HPP_

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <stdexcept>

namespace bergman {

using Complex = std::complex<double>;
using CoeffVector = Eigen::VectorXcd;

/// Pair (alpha, p) identifying a weighted Bergman space A^p_alpha;
/// alpha = -1 stands for the Hardy space H^p.
struct SpaceParams {
  double alpha;
  double p;

  /// The space the inclusion maps (alpha, 2) into: exponent p with weight
  /// p(alpha+2)/2 - 2.
  [[nodiscard]] SpaceParams target(double target_p) const {
    return {0.5 * target_p * (alpha + 2.0) - 2.0, target_p};
  }
};

/// Disk automorphism phi_a(z) = (a - z) / (1 - conj(a) z). Self-inverse.
Complex mobius(Complex a, Complex z);

/// Immutable holomorphic function on the unit disk. One of:
///   Polynomial        finite Taylor series
///   Kernel            scale * (1 - conj(zeta) z)^{-exponent}
///   Power             inner^k
///   IsometryImage     (phi_a')^{(alpha+2)/2} * inner(phi_a(z))
///   Scaled            factor * inner
class AnalyticFunction {
 public:
  static AnalyticFunction polynomial(CoeffVector coeffs);
  static AnalyticFunction kernel_raw(Complex zeta, double exponent,
                                     Complex scale);
  static AnalyticFunction power(const AnalyticFunction& f, int k);
  static AnalyticFunction isometry_image(Complex a, double alpha,
                                         const AnalyticFunction& f);
  static AnalyticFunction scaled(const AnalyticFunction& f, Complex factor);

  /// Pointwise value. |z| <= 1; the boundary is allowed since every variant
  /// here extends continuously to the closed disk.
  [[nodiscard]] Complex eval(Complex z) const;

  /// Analytic derivative, |z| < 1.
  [[nodiscard]] Complex deriv(Complex z) const;

  /// Taylor coefficients a_0 .. a_N. Closed forms where available,
  /// circle sampling + DFT with a de-aliasing check otherwise.
  [[nodiscard]] CoeffVector coefficients(int N) const;

  /// True when coefficients() is exact (no sampling involved).
  [[nodiscard]] bool has_exact_coeffs() const;

  struct Node;
  explicit AnalyticFunction(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  [[nodiscard]] const Node& node() const { return *node_; }

 private:
  std::shared_ptr<const Node> node_;
};

/// Bergman kernel K_zeta(z) = (1 - conj(zeta) z)^{-(alpha+2)} of A^2_alpha
/// (Szego kernel for alpha = -1).
AnalyticFunction kernel(Complex zeta, double alpha);

/// K_zeta scaled by (1 - |zeta|^2)^{(alpha+2)/2}, so its A^2_alpha norm is 1.
AnalyticFunction normalized_kernel(Complex zeta, double alpha);

/// The weighted composition T_a f = (phi_a')^{(alpha+2)/2} f(phi_a), an
/// isometry of both A^2_alpha and A^p_{p(alpha+2)/2 - 2}.
AnalyticFunction apply_isometry(Complex a, double alpha,
                                const AnalyticFunction& f);

}  // namespace bergman

#endif  // BERGMAN_FUNCSPACE_HPP_
