#ifndef BERGMAN_SPECIAL_HPP_
#define BERGMAN_SPECIAL_HPP_

#include <stdexcept>
#include <utility>

namespace bergman::special {

/// log Gamma(x), x > 0. Relative error below 1e-13 on [1e-3, 1e3].
double log_gamma(double x);

/// Euler Beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y),
/// evaluated in log space. Requires x, y > 0.
double beta_fn(double x, double y);

/// c_beta(n): n-th Taylor coefficient of (1 - z)^{-beta}, beta > 0.
/// Equals binom(n + beta - 1, n) = Gamma(n + beta) / (Gamma(beta) n!).
double c_coeff(double beta, int n);

/// H(p, z) expressed through the weight value w = 1 - |z|^2 in [0, 1):
///   H = (p/2) * sum_{n >= 0} w^n / (n + p(alpha+2)/2).
/// Grows like (p/2) log(1/(1-w)) as w -> 1 (z -> 0); w = 1 is rejected.
double h_func(double p, double alpha, double w);

/// dH/dp at p = 2: (1/2) * sum_{n >= 1} n w^n / (n + alpha + 2)^2.
double h_func_dp2(double alpha, double w);

struct IdentityPair {
  double lhs;
  double rhs;
};

/// Both sides of
///   n^2 B(n, (k+1)(a+2)+1) / ((k+1)(a+2)) * c_{(k+1)(a+2)}(n)
///     = n / (n + (k+1)(a+2)),  a = alpha.
IdentityPair beta_binom_identity(int n, int k, double alpha);

/// Both sides of the coefficient convolution
///   sum_{j=0}^n c_{a+2}(j) c_{k(a+2)}(n-j) = c_{(k+1)(a+2)}(n).
IdentityPair c_convolution_identity(int n, int k, double alpha);

}  // namespace bergman::special

#endif  // BERGMAN_SPECIAL_HPP_
