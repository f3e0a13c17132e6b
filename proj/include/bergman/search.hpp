#ifndef BERGMAN_SEARCH_HPP_
#define BERGMAN_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bergman/funcspace.hpp"
#include "bergman/norms.hpp"

namespace bergman::search {

enum class Objective { target_norm, functional_F, functional_G };

struct SearchConfig {
  double alpha = 0.0;
  double p = 4.0;
  int degree = 16;  // truncation degree N
  /// Pin coefficients 0..m to zero (Lambda = {0..m}); nullopt = no pinning.
  std::optional<int> vanish_order;
  Objective objective = Objective::target_norm;
  int restarts = 8;
  int max_iters = 2000;
  double init_step = 0.1;
  double armijo_c = 1e-4;
  double step_floor = 1e-12;
  std::uint64_t rng_seed = 1;
  int n_rad = 48;
  int n_angles = 128;
};

struct SearchResult {
  CoeffVector best_coeffs;  // Taylor coefficients a_0 .. a_N
  double best_value = 0.0;
  double constraint_residual = 0.0;  // | ||f||_{A^2_alpha} - 1 |
  int iterations_used = 0;
  int restarts_used = 0;
  std::vector<double> value_history;  // of the winning restart
  bool converged = true;
};

/// Projected gradient ascent on the coefficient sphere. The substitution
/// b_n = a_n / sqrt(c_{alpha+2}(n)) turns the A^2_alpha constraint into the
/// unit sphere; steps are tangent-projected with backtracking line search
/// and renormalization. best_value is the target norm (for target_norm) or
/// the raw functional value (for functional_F / functional_G).
SearchResult search_extremal(const SearchConfig& config);

/// Wirtinger gradient d(objective)/d(conj a_k) of the raw p-th-power
/// objective, on the config's grid. For real perturbations,
/// d(obj)/dRe(a_k) = 2 Re(g_k) and d(obj)/dIm(a_k) = 2 Im(g_k).
CoeffVector objective_gradient(const CoeffVector& coeffs,
                               const SearchConfig& config);

/// Raw optimization objective (||f||^p, F_p, or G_p) at the given
/// coefficients; companion of objective_gradient.
double objective_value(const CoeffVector& coeffs, const SearchConfig& config);

/// inclusion_ratio on normalized kernels over a real zeta grid.
std::pair<double, double> kernel_line_search(double alpha, double p,
                                             std::span<const double> zetas,
                                             const norms::GridOptions& opt = {});

struct SweepCell {
  int m;
  double best_value;
  bool ok;
};

/// search_extremal per vanishing order; the restricted suprema are predicted
/// to agree across m.
std::vector<SweepCell> vanishing_sweep(const SearchConfig& base,
                                       std::span<const int> m_values);

}  // namespace bergman::search

#endif  // BERGMAN_SEARCH_HPP_
