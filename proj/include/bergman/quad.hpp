#ifndef BERGMAN_QUAD_HPP_
#define BERGMAN_QUAD_HPP_

#include <Eigen/Dense>
#include <functional>

#include "bergman/funcspace.hpp"

namespace bergman::quad {

/// Gauss-Jacobi rule for integrals int_0^1 (1-t)^gamma g(t) dt, gamma > -1.
/// Nodes lie strictly inside (0, 1); weights sum to 1/(gamma+1).
struct RadialRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

RadialRule gauss_jacobi01(double gamma, int n);

/// Tensor rule for int_D (1-|z|^2)^gamma g(z) dA under the substitution
/// t = |z|^2: Jacobi-weighted radial nodes times uniform angles.
struct DiskGrid {
  double gamma;
  Eigen::VectorXd radial_nodes;    // t in (0, 1)
  Eigen::VectorXd radial_weights;  // absorb (1-t)^gamma; sum = 1/(gamma+1)
  int n_angles;
};

DiskGrid disk_grid(double gamma, int n_rad, int n_angles);

/// tanh-sinh rule for int_0^1 f(t) dt, tolerant of endpoint singularities
/// (log at t = 0, algebraic weights at t = 1). one_minus_t is carried
/// separately so (1-t)^gamma factors stay accurate near t = 1. n_rad acts
/// as the resolution parameter: doubling it halves the step.
struct DERule {
  Eigen::VectorXd t;
  Eigen::VectorXd one_minus_t;
  Eigen::VectorXd weights;
};

DERule double_exponential01(int n_rad);

/// Weighted tensor sum of the integrand over the grid; deterministic
/// (compensated, fixed-order) reduction. Throws if the integrand returns a
/// non-finite value, naming the node.
double integrate_disk(const DiskGrid& grid,
                      const std::function<double(Complex)>& integrand);

/// Integral p-mean M_p(r, f) by the uniform angular rule.
double circle_mean(const AnalyticFunction& f, double p, double r,
                   int n_angles);

/// Compensated accumulator; fixed summation order keeps results
/// reproducible.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace bergman::quad

#endif  // BERGMAN_QUAD_HPP_
