#include "bergman/norms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bergman/special.hpp"

namespace bergman::norms {

namespace {

// Angular mean of |f'|^2 |f|^{p-2} at radius sqrt(t).
double deriv_density_mean(const AnalyticFunction& f, double p, double t,
                          int n_angles) {
  quad::KahanSum sum;
  const double r = std::sqrt(t);
  const double dth = 2.0 * std::numbers::pi / n_angles;
  for (int j = 0; j < n_angles; ++j) {
    const double th = dth * j;
    const Complex z(r * std::cos(th), r * std::sin(th));
    const double fd = std::abs(f.deriv(z));
    sum.add(fd * fd * abs_pow(std::abs(f.eval(z)), p - 2.0));
  }
  return sum.value() / n_angles;
}

double bergman_norm_once(const AnalyticFunction& f, SpaceParams space,
                         int n_rad, int n_angles) {
  const quad::DiskGrid grid = quad::disk_grid(space.alpha, n_rad, n_angles);
  const double p = space.p;
  const double integral = quad::integrate_disk(
      grid, [&](Complex z) { return abs_pow(std::abs(f.eval(z)), p); });
  return std::pow((space.alpha + 1.0) * integral, 1.0 / p);
}

double hs_like_once(const AnalyticFunction& f, double alpha, double p,
                    double h_at_p, int n_rad, int n_angles) {
  // int_D |f'|^2 |f|^{p-2} (1-t)^{c} H(h_at_p, z) dA with c = p(alpha+2)/2;
  // H depends on w = 1 - t only, so it is evaluated once per radius. H grows
  // like log(1/t) near the origin, so the radial direction uses a tanh-sinh
  // rule, which keeps spectral accuracy through that endpoint.
  const double c = 0.5 * p * (alpha + 2.0);
  const quad::DERule rule = quad::double_exponential01(n_rad);
  const double w_cap = std::nextafter(1.0, 0.0);
  quad::KahanSum total;
  for (Eigen::Index i = 0; i < rule.t.size(); ++i) {
    const double omt = rule.one_minus_t[i];
    const double jac = std::pow(omt, c);
    if (jac == 0.0) {
      continue;
    }
    const double h = special::h_func(h_at_p, alpha, std::min(omt, w_cap));
    total.add(rule.weights[i] * jac * h *
              deriv_density_mean(f, p, rule.t[i], n_angles));
  }
  return total.value();
}

}  // namespace

NormReport bergman_norm(const AnalyticFunction& f, SpaceParams space,
                        const GridOptions& opt) {
  if (!(space.alpha > -1.0)) {
    throw std::domain_error("bergman_norm: alpha must be > -1");
  }
  if (!(space.p > 0.0)) {
    throw std::domain_error("bergman_norm: p must be positive");
  }
  NormReport rep;
  rep.space = space;
  rep.method = Method::quadrature;
  rep.n_rad = opt.n_rad;
  rep.n_angles = opt.n_angles;
  rep.value = bergman_norm_once(f, space, opt.n_rad, opt.n_angles);
  if (opt.check_refinement) {
    const double refined =
        bergman_norm_once(f, space, 2 * opt.n_rad, 2 * opt.n_angles);
    rep.refinement_delta = std::abs(refined - rep.value);
  }
  return rep;
}

NormReport hardy_norm(const AnalyticFunction& f, double p,
                      const GridOptions& opt) {
  if (!(p > 0.0)) {
    throw std::domain_error("hardy_norm: p must be positive");
  }
  NormReport rep;
  rep.space = SpaceParams{-1.0, p};
  rep.method = Method::quadrature;
  rep.n_angles = opt.n_angles;
  // M_p(r, f) is nondecreasing in r, so the supremum is the boundary mean.
  rep.value = quad::circle_mean(f, p, 1.0, opt.n_angles);
  if (opt.check_refinement) {
    const double refined = quad::circle_mean(f, p, 1.0, 2 * opt.n_angles);
    rep.refinement_delta = std::abs(refined - rep.value);
  }
  return rep;
}

NormReport a2_coeff_norm(const AnalyticFunction& f, double alpha) {
  if (!(alpha >= -1.0)) {
    throw std::domain_error("a2_coeff_norm: alpha must be >= -1");
  }
  const double beta = alpha + 2.0;
  NormReport rep;
  rep.space = SpaceParams{alpha, 2.0};
  rep.method = Method::coefficient;
  for (int N = 64; N <= 4096; N *= 2) {
    const CoeffVector a = f.coefficients(N);
    quad::KahanSum head;
    quad::KahanSum tail;
    for (int n = 0; n <= N; ++n) {
      const double term = std::norm(a[n]) / special::c_coeff(beta, n);
      (n <= N / 2 ? head : tail).add(term);
    }
    const double total = head.value() + tail.value();
    if (total == 0.0) {
      rep.value = 0.0;
      rep.series_len = N;
      return rep;
    }
    if (tail.value() < 1e-12 * total) {
      rep.value = std::sqrt(total);
      rep.series_len = N;
      return rep;
    }
  }
  throw std::runtime_error(
      "a2_coeff_norm: coefficient tail not below tolerance by N = 4096");
}

NormReport hs_norm(const AnalyticFunction& f, double alpha, double p,
                   const GridOptions& opt) {
  if (!(p > 2.0)) {
    throw std::domain_error("hs_norm: p must be > 2");
  }
  if (!(alpha >= -1.0)) {
    throw std::domain_error("hs_norm: alpha must be >= -1");
  }
  const double f0p = std::pow(std::abs(f.eval(0.0)), p);
  const auto once = [&](int nr, int na) {
    return std::pow(
        f0p + 0.5 * p * hs_like_once(f, alpha, p, p, nr, na), 1.0 / p);
  };
  NormReport rep;
  rep.space = SpaceParams{0.5 * p * (alpha + 2.0) - 2.0, p};
  rep.method = Method::hardy_stein;
  rep.n_rad = opt.n_rad;
  rep.n_angles = opt.n_angles;
  rep.value = once(opt.n_rad, opt.n_angles);
  if (opt.check_refinement) {
    rep.refinement_delta =
        std::abs(once(2 * opt.n_rad, 2 * opt.n_angles) - rep.value);
  }
  return rep;
}

double functional_F(const AnalyticFunction& f, double alpha, double p,
                    const GridOptions& opt) {
  if (!(p > 2.0)) {
    throw std::domain_error("functional_F: p must be > 2");
  }
  const double f0p = std::pow(std::abs(f.eval(0.0)), p);
  return f0p +
         0.5 * p * hs_like_once(f, alpha, p, 2.0, opt.n_rad, opt.n_angles);
}

double functional_G(const AnalyticFunction& f, double alpha, double p,
                    const GridOptions& opt) {
  if (!(p > 2.0)) {
    throw std::domain_error("functional_G: p must be > 2");
  }
  const double c = 0.5 * p * (alpha + 2.0);
  const quad::RadialRule rule = quad::gauss_jacobi01(c, opt.n_rad);
  quad::KahanSum total;
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    total.add(rule.weights[i] *
              deriv_density_mean(f, p, rule.nodes[i], opt.n_angles));
  }
  return 0.5 * p / (alpha + 2.0) * total.value();
}

double hardy_stein_residual(const AnalyticFunction& f, double p, double r,
                            const GridOptions& opt) {
  if (!(r > 0.0) || !(r < 1.0)) {
    throw std::domain_error("hardy_stein_residual: r must lie in (0, 1)");
  }
  const double h = 1e-4;
  if (r - h <= 0.0 || r + h >= 1.0) {
    throw std::domain_error("hardy_stein_residual: r too close to 0 or 1");
  }
  const auto mpp = [&](double rho) {
    return std::pow(quad::circle_mean(f, p, rho, opt.n_angles), p);
  };
  const double d1 = (mpp(r + h) - mpp(r - h)) / (2.0 * h);
  const double d2 = (mpp(r + 0.5 * h) - mpp(r - 0.5 * h)) / h;
  if (std::abs(d1 - d2) > 1e-5 * std::max(1.0, std::abs(d2))) {
    throw std::runtime_error(
        "hardy_stein_residual: finite-difference step check failed");
  }
  const double lhs = (4.0 * d2 - d1) / 3.0;

  // int_{rD} |f'|^2 |f|^{p-2} dA with t = r^2 u, u in (0,1).
  const quad::RadialRule rule = quad::gauss_jacobi01(0.0, opt.n_rad);
  quad::KahanSum total;
  const double r2 = r * r;
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    total.add(rule.weights[i] *
              deriv_density_mean(f, p, r2 * rule.nodes[i], opt.n_angles));
  }
  const double rhs = 0.5 * p * p / r * r2 * total.value();
  return lhs - rhs;
}

double point_bound_margin(const AnalyticFunction& f, SpaceParams space,
                          Complex z, const GridOptions& opt) {
  if (std::abs(z) >= 1.0) {
    throw std::domain_error("point_bound_margin: |z| must be < 1");
  }
  const double norm = space.alpha == -1.0
                          ? hardy_norm(f, space.p, opt).value
                          : bergman_norm(f, space, opt).value;
  const double local =
      std::abs(f.eval(z)) *
      std::pow(1.0 - std::norm(z), (space.alpha + 2.0) / space.p);
  return norm - local;
}

}  // namespace bergman::norms
