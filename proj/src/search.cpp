#include "bergman/search.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bergman/bounds.hpp"
#include "bergman/quad.hpp"
#include "bergman/special.hpp"

namespace bergman::search {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// Deterministic normals independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    while (u <= 0.0) {
      u = uniform();
    }
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double th = 2.0 * std::numbers::pi * v;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

double guarded_pow(double x, double e) {
  if (x < 1e-300) {
    return 0.0;
  }
  return std::pow(x, e);
}

struct Workspace {
  VectorXd wts;   // radial weight * (1/n_angles); (1-t)^gamma absorbed
  MatrixXcd Z;    // node x (N+1): z^n
  MatrixXcd Zd;   // node x (N+1): n z^{n-1}
  VectorXd h2;    // H(2, alpha, 1-t) per node (functional_F only)
  double gamma;
  double target_norm_factor;  // (gamma+1) for target_norm
};

Workspace make_workspace(const SearchConfig& cfg) {
  const double c = 0.5 * cfg.p * (cfg.alpha + 2.0);
  Workspace ws;
  ws.gamma = cfg.objective == Objective::target_norm ? c - 2.0 : c;
  const quad::RadialRule rule = quad::gauss_jacobi01(ws.gamma, cfg.n_rad);
  const int nodes = cfg.n_rad * cfg.n_angles;
  const int cols = cfg.degree + 1;
  ws.wts.resize(nodes);
  ws.Z.resize(nodes, cols);
  ws.Zd.resize(nodes, cols);
  const bool need_h2 = cfg.objective == Objective::functional_F;
  if (need_h2) {
    ws.h2.resize(nodes);
  }
  const double dth = 2.0 * std::numbers::pi / cfg.n_angles;
  for (int i = 0; i < cfg.n_rad; ++i) {
    const double t = rule.nodes[i];
    const double r = std::sqrt(t);
    const double h2i =
        need_h2 ? special::h_func(2.0, cfg.alpha, 1.0 - t) : 0.0;
    for (int j = 0; j < cfg.n_angles; ++j) {
      const int row = i * cfg.n_angles + j;
      const double th = dth * j;
      const Complex z(r * std::cos(th), r * std::sin(th));
      ws.wts[row] = rule.weights[i] / cfg.n_angles;
      Complex zp = 1.0;
      for (int n = 0; n < cols; ++n) {
        ws.Z(row, n) = zp;
        ws.Zd(row, n) = n == 0 ? Complex(0.0) : double(n) * ws.Z(row, n - 1);
        zp *= z;
      }
      if (need_h2) {
        ws.h2[row] = h2i;
      }
    }
  }
  ws.target_norm_factor = ws.gamma + 1.0;
  return ws;
}

double raw_objective(const Workspace& ws, const SearchConfig& cfg,
                     const VectorXcd& a) {
  const double p = cfg.p;
  switch (cfg.objective) {
    case Objective::target_norm: {
      const VectorXcd f = ws.Z * a;
      quad::KahanSum s;
      for (Eigen::Index i = 0; i < f.size(); ++i) {
        s.add(ws.wts[i] * guarded_pow(std::abs(f[i]), p));
      }
      return ws.target_norm_factor * s.value();
    }
    case Objective::functional_F: {
      const VectorXcd f = ws.Z * a;
      const VectorXcd fd = ws.Zd * a;
      quad::KahanSum s;
      for (Eigen::Index i = 0; i < f.size(); ++i) {
        s.add(ws.wts[i] * ws.h2[i] * std::norm(fd[i]) *
              guarded_pow(std::abs(f[i]), p - 2.0));
      }
      return guarded_pow(std::abs(a[0]), p) + 0.5 * p * s.value();
    }
    case Objective::functional_G: {
      const VectorXcd f = ws.Z * a;
      const VectorXcd fd = ws.Zd * a;
      quad::KahanSum s;
      for (Eigen::Index i = 0; i < f.size(); ++i) {
        s.add(ws.wts[i] * std::norm(fd[i]) *
              guarded_pow(std::abs(f[i]), p - 2.0));
      }
      return 0.5 * p / (cfg.alpha + 2.0) * s.value();
    }
  }
  return 0.0;
}

VectorXcd raw_gradient(const Workspace& ws, const SearchConfig& cfg,
                       const VectorXcd& a) {
  const double p = cfg.p;
  const Eigen::Index nodes = ws.Z.rows();
  switch (cfg.objective) {
    case Objective::target_norm: {
      const VectorXcd f = ws.Z * a;
      VectorXcd u(nodes);
      for (Eigen::Index i = 0; i < nodes; ++i) {
        u[i] = ws.wts[i] * guarded_pow(std::abs(f[i]), p - 2.0) * f[i];
      }
      return ws.target_norm_factor * 0.5 * p * (ws.Z.adjoint() * u);
    }
    case Objective::functional_F:
    case Objective::functional_G: {
      const bool is_f = cfg.objective == Objective::functional_F;
      const VectorXcd f = ws.Z * a;
      const VectorXcd fd = ws.Zd * a;
      VectorXcd u(nodes);  // against the derivative basis
      VectorXcd v(nodes);  // against the value basis
      for (Eigen::Index i = 0; i < nodes; ++i) {
        const double h = is_f ? ws.h2[i] : 1.0;
        const double absf = std::abs(f[i]);
        u[i] = ws.wts[i] * h * guarded_pow(absf, p - 2.0) * fd[i];
        v[i] = ws.wts[i] * h * std::norm(fd[i]) * 0.5 * (p - 2.0) *
               guarded_pow(absf, p - 4.0) * f[i];
      }
      VectorXcd g = ws.Zd.adjoint() * u + ws.Z.adjoint() * v;
      const double factor = is_f ? 0.5 * p : 0.5 * p / (cfg.alpha + 2.0);
      g *= factor;
      if (is_f) {
        g[0] += 0.5 * p * guarded_pow(std::abs(a[0]), p - 2.0) * a[0];
      }
      return g;
    }
  }
  return VectorXcd::Zero(a.size());
}

struct RestartOutcome {
  VectorXcd b;
  double value = -1.0;
  int iterations = 0;
  std::vector<double> history;
  bool ok = false;
};

RestartOutcome run_restart(const Workspace& ws, const SearchConfig& cfg,
                           const VectorXd& sqrt_c, int first_free,
                           VectorXcd b) {
  const auto pin = [&](VectorXcd& x) {
    for (int n = 0; n < first_free; ++n) {
      x[n] = 0.0;
    }
  };
  pin(b);
  const double nb = b.norm();
  if (!(nb > 0.0)) {
    return {};
  }
  b /= nb;

  const auto value_at = [&](const VectorXcd& bb) {
    return raw_objective(ws, cfg, (sqrt_c.array() * bb.array()).matrix());
  };

  RestartOutcome out;
  double val = value_at(b);
  if (!std::isfinite(val)) {
    return {};
  }
  out.history.push_back(val);
  int stall = 0;
  int iter = 0;
  for (; iter < cfg.max_iters; ++iter) {
    const VectorXcd a = (sqrt_c.array() * b.array()).matrix();
    VectorXcd g =
        (sqrt_c.array() * raw_gradient(ws, cfg, a).array()).matrix();
    pin(g);
    // Tangent projection on the real sphere ||b|| = 1.
    const Complex inner = b.dot(g);  // conj(b) . g
    VectorXcd d = g - inner.real() * b;
    const double dnorm2 = d.squaredNorm();
    if (!(dnorm2 > 0.0) || !std::isfinite(dnorm2)) {
      break;
    }
    double step = cfg.init_step;
    bool accepted = false;
    while (step >= cfg.step_floor) {
      VectorXcd trial = b + step * d;
      pin(trial);
      trial /= trial.norm();
      const double tv = value_at(trial);
      if (std::isfinite(tv) &&
          tv >= val + cfg.armijo_c * step * 2.0 * dnorm2) {
        const double improvement = tv - val;
        b = trial;
        val = tv;
        accepted = true;
        stall = improvement < 1e-13 * std::max(1.0, std::abs(val))
                    ? stall + 1
                    : 0;
        break;
      }
      step *= 0.5;
    }
    out.history.push_back(val);
    if (!accepted || stall >= 25) {
      ++iter;
      break;
    }
  }
  out.b = b;
  out.value = val;
  out.iterations = iter;
  out.ok = std::isfinite(val);
  return out;
}

}  // namespace

double objective_value(const CoeffVector& coeffs, const SearchConfig& cfg) {
  const Workspace ws = make_workspace(cfg);
  CoeffVector a = CoeffVector::Zero(cfg.degree + 1);
  a.head(std::min<Eigen::Index>(coeffs.size(), a.size())) =
      coeffs.head(std::min<Eigen::Index>(coeffs.size(), a.size()));
  return raw_objective(ws, cfg, a);
}

CoeffVector objective_gradient(const CoeffVector& coeffs,
                               const SearchConfig& cfg) {
  const Workspace ws = make_workspace(cfg);
  CoeffVector a = CoeffVector::Zero(cfg.degree + 1);
  a.head(std::min<Eigen::Index>(coeffs.size(), a.size())) =
      coeffs.head(std::min<Eigen::Index>(coeffs.size(), a.size()));
  return raw_gradient(ws, cfg, a);
}

SearchResult search_extremal(const SearchConfig& cfg) {
  if (!(cfg.p > 2.0)) {
    throw std::domain_error("search_extremal: p must be > 2");
  }
  if (!(cfg.alpha >= -1.0)) {
    throw std::domain_error("search_extremal: alpha must be >= -1");
  }
  if (cfg.degree < 1) {
    throw std::domain_error("search_extremal: degree must be >= 1");
  }
  if (cfg.vanish_order && (*cfg.vanish_order < 0 ||
                           *cfg.vanish_order >= cfg.degree)) {
    throw std::domain_error("search_extremal: need 0 <= m < degree");
  }
  const int N = cfg.degree;
  const int first_free = cfg.vanish_order ? *cfg.vanish_order + 1 : 0;
  const Workspace ws = make_workspace(cfg);

  VectorXd sqrt_c(N + 1);
  for (int n = 0; n <= N; ++n) {
    sqrt_c[n] = std::sqrt(special::c_coeff(cfg.alpha + 2.0, n));
  }

  RestartOutcome best;
  int restarts_done = 0;
  for (int r = 0; r < cfg.restarts; ++r) {
    VectorXcd b0(N + 1);
    if (r == 0 && first_free == 0) {
      // Kernel-shaped start: truncated normalized kernel at zeta = 0.5.
      const CoeffVector ka = normalized_kernel(0.5, cfg.alpha).coefficients(N);
      b0 = (ka.array() / sqrt_c.array().cast<Complex>()).matrix();
    } else {
      Rng rng(cfg.rng_seed + static_cast<std::uint64_t>(r));
      for (int n = 0; n <= N; ++n) {
        b0[n] = Complex(rng.normal(), rng.normal());
      }
    }
    RestartOutcome out = run_restart(ws, cfg, sqrt_c, first_free, b0);
    ++restarts_done;
    if (out.ok && (!best.ok || out.value > best.value)) {
      best = std::move(out);
    }
  }

  SearchResult res;
  res.restarts_used = restarts_done;
  if (!best.ok) {
    res.converged = false;
    res.best_coeffs = CoeffVector::Zero(N + 1);
    return res;
  }
  CoeffVector a = (sqrt_c.array() * best.b.array()).matrix();
  // Quotient out the global rotation: make the first free coefficient
  // nonnegative real.
  if (std::abs(a[first_free]) > 0.0) {
    a *= std::abs(a[first_free]) / a[first_free];
  }
  res.best_coeffs = a;
  res.best_value = cfg.objective == Objective::target_norm
                       ? std::pow(best.value, 1.0 / cfg.p)
                       : best.value;
  res.iterations_used = best.iterations;
  res.value_history = std::move(best.history);
  res.constraint_residual =
      std::abs(norms::a2_coeff_norm(AnalyticFunction::polynomial(a),
                                    cfg.alpha)
                   .value -
               1.0);
  return res;
}

std::pair<double, double> kernel_line_search(double alpha, double p,
                                             std::span<const double> zetas,
                                             const norms::GridOptions& opt) {
  if (zetas.empty()) {
    throw std::domain_error("kernel_line_search: empty zeta grid");
  }
  double best_zeta = zetas[0];
  double best_ratio = -1.0;
  for (const double z : zetas) {
    const double ratio =
        bounds::inclusion_ratio(normalized_kernel(z, alpha), alpha, p, opt);
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_zeta = z;
    }
  }
  return {best_zeta, best_ratio};
}

std::vector<SweepCell> vanishing_sweep(const SearchConfig& base,
                                       std::span<const int> m_values) {
  std::vector<SweepCell> cells;
  cells.reserve(m_values.size());
  for (const int m : m_values) {
    SearchConfig cfg = base;
    cfg.vanish_order = m;
    try {
      const SearchResult res = search_extremal(cfg);
      cells.push_back({m, res.best_value, res.converged});
    } catch (const std::exception&) {
      cells.push_back({m, 0.0, false});
    }
  }
  return cells;
}

}  // namespace bergman::search
