#include "bergman/quad.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace bergman::quad {

namespace {

// Three-term recurrence for orthonormal Jacobi polynomials on [-1, 1] with
// weight (1-x)^a (parameter b = 0).
struct JacobiRecurrence {
  Eigen::VectorXd alpha;  // diagonal
  Eigen::VectorXd beta;   // off-diagonal squared, beta[0] = mu0
};

JacobiRecurrence jacobi_recurrence(double a, int n) {
  JacobiRecurrence rec;
  rec.alpha.resize(n);
  rec.beta.resize(n);
  rec.beta[0] = std::pow(2.0, a + 1.0) / (a + 1.0);  // mu0
  rec.alpha[0] = -a / (a + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a;
    rec.alpha[k] = -(a * a) / (s * (s + 2.0));
    rec.beta[k] =
        4.0 * k * k * (k + a) * (k + a) / (s * s * (s + 1.0) * (s - 1.0));
  }
  return rec;
}

// p_0 .. p_n at x (orthonormal); returns p_n and fills sum of squares of
// p_0 .. p_{n-1} plus the derivative of p_n.
struct PolyEval {
  double pn;
  double pn_deriv;
  double christoffel;  // sum_{k<n} p_k(x)^2
};

// rec must hold at least n+1 recurrence rows.
PolyEval eval_orthonormal(const JacobiRecurrence& rec, int n, double x) {
  double pkm1 = 0.0;
  double pk = 1.0 / std::sqrt(rec.beta[0]);
  double dkm1 = 0.0;
  double dk = 0.0;
  double chris = 0.0;
  for (int k = 0; k < n; ++k) {
    chris += pk * pk;
    const double sqb_next = std::sqrt(rec.beta[k + 1]);
    const double sqb_prev = k > 0 ? std::sqrt(rec.beta[k]) : 0.0;
    const double pnext =
        ((x - rec.alpha[k]) * pk - sqb_prev * pkm1) / sqb_next;
    const double dnext =
        ((x - rec.alpha[k]) * dk + pk - sqb_prev * dkm1) / sqb_next;
    pkm1 = pk;
    pk = pnext;
    dkm1 = dk;
    dk = dnext;
  }
  return {pk, dk, chris};
}

}  // namespace

RadialRule gauss_jacobi01(double gamma, int n) {
  if (!(gamma > -1.0)) {
    throw std::domain_error("gauss_jacobi01: gamma must be > -1");
  }
  if (n < 1) {
    throw std::domain_error("gauss_jacobi01: n must be >= 1");
  }
  // One extra recurrence row so the normalization of p_n is available.
  const JacobiRecurrence rec = jacobi_recurrence(gamma, n + 1);

  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    J(k, k) = rec.alpha[k];
    if (k + 1 < n) {
      const double ob = std::sqrt(rec.beta[k + 1]);
      J(k, k + 1) = ob;
      J(k + 1, k) = ob;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J,
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("gauss_jacobi01: eigen solve did not converge");
  }
  Eigen::VectorXd x = es.eigenvalues();

  RadialRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton polish of the eigenvalue against the recurrence.
    double xi = x[i];
    bool converged = false;
    for (int it = 0; it < 50; ++it) {
      const PolyEval pe = eval_orthonormal(rec, n, xi);
      const double dx = pe.pn / pe.pn_deriv;
      xi -= dx;
      if (std::abs(dx) < 1e-15 * (1.0 + std::abs(xi))) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw std::runtime_error("gauss_jacobi01: node iteration stalled");
    }
    const PolyEval pe = eval_orthonormal(rec, n, xi);
    const double w = 1.0 / pe.christoffel;
    rule.nodes[i] = 0.5 * (xi + 1.0);
    rule.weights[i] = w * std::pow(2.0, -gamma - 1.0);
  }
  return rule;
}

DiskGrid disk_grid(double gamma, int n_rad, int n_angles) {
  if (!(gamma > -1.0)) {
    throw std::domain_error("disk_grid: gamma must be > -1");
  }
  if (n_rad < 1 || n_angles < 1) {
    throw std::domain_error("disk_grid: sizes must be positive");
  }
  const RadialRule rule = gauss_jacobi01(gamma, n_rad);
  return DiskGrid{gamma, rule.nodes, rule.weights, n_angles};
}

DERule double_exponential01(int n_rad) {
  if (n_rad < 8) {
    throw std::domain_error("double_exponential01: n_rad must be >= 8");
  }
  const double h = 6.6 / n_rad;
  const double half_pi = 0.5 * std::numbers::pi;
  std::vector<double> t;
  std::vector<double> omt;
  std::vector<double> wt;
  // Expand symmetrically from j = 0 until the transformed weight is
  // negligible; nodes cluster double-exponentially at both endpoints.
  const auto push = [&](int j) {
    const double u = j * h;
    const double x = half_pi * std::sinh(u);
    const double ch = std::cosh(x);
    const double w = 0.5 * h * half_pi * std::cosh(u) / (ch * ch);
    if (w < 1e-17) {
      return false;
    }
    t.push_back(1.0 / (1.0 + std::exp(-2.0 * x)));
    omt.push_back(1.0 / (1.0 + std::exp(2.0 * x)));
    wt.push_back(w);
    return true;
  };
  push(0);
  for (int j = 1; j < 4 * n_rad; ++j) {
    const bool lo = push(-j);
    const bool hi = push(j);
    if (!lo && !hi) {
      break;
    }
  }
  DERule rule;
  const auto n = static_cast<Eigen::Index>(t.size());
  rule.t.resize(n);
  rule.one_minus_t.resize(n);
  rule.weights.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    rule.t[i] = t[i];
    rule.one_minus_t[i] = omt[i];
    rule.weights[i] = wt[i];
  }
  return rule;
}

double integrate_disk(const DiskGrid& grid,
                      const std::function<double(Complex)>& integrand) {
  KahanSum outer;
  const double dth = 2.0 * std::numbers::pi / grid.n_angles;
  for (Eigen::Index i = 0; i < grid.radial_nodes.size(); ++i) {
    const double r = std::sqrt(grid.radial_nodes[i]);
    KahanSum inner;
    for (int j = 0; j < grid.n_angles; ++j) {
      const double th = dth * j;
      const Complex z(r * std::cos(th), r * std::sin(th));
      const double v = integrand(z);
      if (!std::isfinite(v)) {
        throw std::runtime_error(
            "integrate_disk: non-finite integrand at node (t=" +
            std::to_string(grid.radial_nodes[i]) +
            ", theta=" + std::to_string(th) + ")");
      }
      inner.add(v);
    }
    outer.add(grid.radial_weights[i] * inner.value() / grid.n_angles);
  }
  return outer.value();
}

double circle_mean(const AnalyticFunction& f, double p, double r,
                   int n_angles) {
  if (!(p > 0.0)) {
    throw std::domain_error("circle_mean: p must be positive");
  }
  if (!(r > 0.0) || r > 1.0 + 1e-12) {
    throw std::domain_error("circle_mean: r must lie in (0, 1]");
  }
  if (n_angles < 1) {
    throw std::domain_error("circle_mean: n_angles must be positive");
  }
  KahanSum sum;
  const double dth = 2.0 * std::numbers::pi / n_angles;
  for (int j = 0; j < n_angles; ++j) {
    const double th = dth * j;
    const Complex z(r * std::cos(th), r * std::sin(th));
    sum.add(std::pow(std::abs(f.eval(z)), p));
  }
  return std::pow(sum.value() / n_angles, 1.0 / p);
}

}  // namespace bergman::quad
