// Command-line front end: norms, functionals, Hardy-Stein residuals,
// bound curves, inclusion ratios, extremal searches and a verification
// suite for the contractive-inclusion toolkit.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bergman/bounds.hpp"
#include "bergman/funcspace.hpp"
#include "bergman/norms.hpp"
#include "bergman/search.hpp"
#include "bergman/spec_json.hpp"
#include "bergman/special.hpp"

namespace {

using namespace bergman;
using nlohmann::json;

struct CommonOpts {
  double alpha = 0.0;
  double p = 4.0;
  std::string spec;
  std::string spec_file;
  int n_rad = 80;
  int n_angles = 256;
  std::string format = "human";
  std::string out;
  int precision = 12;
};

std::string fmt_num(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

std::ostream& open_output(const CommonOpts& opt, std::ofstream& file) {
  if (opt.out.empty()) {
    return std::cout;
  }
  file.open(opt.out);
  if (!file) {
    throw std::runtime_error("cannot open output file " + opt.out);
  }
  return file;
}

AnalyticFunction load_function(const CommonOpts& opt) {
  if (!opt.spec.empty()) {
    return spec_json::parse_function_string(opt.spec);
  }
  if (!opt.spec_file.empty()) {
    std::ifstream in(opt.spec_file);
    if (!in) {
      throw std::invalid_argument("cannot read spec file " + opt.spec_file);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return spec_json::parse_function_string(ss.str());
  }
  throw std::invalid_argument("one of --spec / --spec-file is required");
}

void add_common(CLI::App* cmd, CommonOpts& opt, bool with_function) {
  cmd->add_option("--alpha", opt.alpha, "weight parameter alpha (>= -1)");
  cmd->add_option("--p", opt.p, "exponent p");
  if (with_function) {
    cmd->add_option("--spec", opt.spec, "inline function-spec JSON");
    cmd->add_option("--spec-file", opt.spec_file, "function-spec JSON file");
  }
  cmd->add_option("--nrad", opt.n_rad, "radial quadrature nodes");
  cmd->add_option("--nangles", opt.n_angles, "angular quadrature nodes");
  cmd->add_option("--format", opt.format, "human|json|csv");
  cmd->add_option("--out", opt.out, "output path (default stdout)");
  cmd->add_option("--precision", opt.precision, "significant digits");
}

int run_norm(const CommonOpts& opt) {
  const AnalyticFunction f = load_function(opt);
  norms::GridOptions grid{opt.n_rad, opt.n_angles, true};
  std::vector<norms::NormReport> reports;

  if (opt.alpha == -1.0) {
    reports.push_back(norms::hardy_norm(f, opt.p, grid));
  } else {
    reports.push_back(
        norms::bergman_norm(f, SpaceParams{opt.alpha, opt.p}, grid));
  }
  if (opt.p == 2.0) {
    reports.push_back(norms::a2_coeff_norm(f, opt.alpha));
  }
  // The Hardy-Stein route computes || . ||_{A^p_alpha} when alpha matches a
  // source space: alpha = p(alpha_src + 2)/2 - 2.
  const double alpha_src = 2.0 * (opt.alpha + 2.0) / opt.p - 2.0;
  if (opt.p > 2.0 && alpha_src >= -1.0) {
    reports.push_back(norms::hs_norm(f, alpha_src, opt.p, grid));
  }

  std::ofstream file;
  std::ostream& os = open_output(opt, file);
  if (opt.format == "json") {
    json j = json::array();
    for (const auto& r : reports) {
      j.push_back(spec_json::to_json(r));
    }
    json root{{"reports", j}};
    if (reports.size() > 1) {
      json deltas = json::array();
      for (std::size_t i = 1; i < reports.size(); ++i) {
        deltas.push_back(std::abs(reports[i].value - reports[0].value));
      }
      root["cross_deltas"] = deltas;
    }
    os << root.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      const char* m = r.method == norms::Method::coefficient ? "coefficient"
                      : r.method == norms::Method::quadrature
                          ? "quadrature"
                          : "hardy-stein";
      os << m << ": " << fmt_num(r.value, opt.precision);
      if (r.method != norms::Method::coefficient) {
        os << "  (refinement delta " << fmt_num(r.refinement_delta, 3)
           << ")";
      }
      os << "\n";
    }
    for (std::size_t i = 1; i < reports.size(); ++i) {
      os << "cross-delta vs first: "
         << fmt_num(std::abs(reports[i].value - reports[0].value), 3)
         << "\n";
    }
  }
  for (const auto& r : reports) {
    if (r.method != norms::Method::coefficient &&
        r.refinement_delta > 1e-6 * std::max(1.0, r.value)) {
      std::cerr << "{\"error\":\"refinement delta above tolerance\"}\n";
      return 1;
    }
  }
  return 0;
}

int run_functional(const CommonOpts& opt) {
  const AnalyticFunction f = load_function(opt);
  norms::GridOptions grid{opt.n_rad, opt.n_angles, false};
  const double F = norms::functional_F(f, opt.alpha, opt.p, grid);
  const double G = norms::functional_G(f, opt.alpha, opt.p, grid);
  std::ofstream file;
  std::ostream& os = open_output(opt, file);
  if (opt.format == "json") {
    os << json{{"F", F}, {"G", G}}.dump(2) << "\n";
  } else {
    os << "F_p = " << fmt_num(F, opt.precision) << "\n"
       << "G_p = " << fmt_num(G, opt.precision) << "\n";
  }
  return 0;
}

int run_hardy_stein(const CommonOpts& opt, double rstep) {
  const AnalyticFunction f = load_function(opt);
  norms::GridOptions grid{opt.n_rad, opt.n_angles, false};
  std::ofstream file;
  std::ostream& os = open_output(opt, file);
  json rows = json::array();
  if (opt.format == "csv") {
    os << "r,residual\n";
  }
  for (double r = rstep; r < 1.0 - 1e-9; r += rstep) {
    const double res = norms::hardy_stein_residual(f, opt.p, r, grid);
    if (opt.format == "json") {
      rows.push_back({{"r", r}, {"residual", res}});
    } else if (opt.format == "csv") {
      os << fmt_num(r, opt.precision) << "," << fmt_num(res, opt.precision)
         << "\n";
    } else {
      os << "r = " << fmt_num(r, 6)
         << "  residual = " << fmt_num(res, opt.precision) << "\n";
    }
  }
  if (opt.format == "json") {
    os << rows.dump(2) << "\n";
  }
  return 0;
}

int run_bounds(const CommonOpts& opt, double pmin, double pmax,
               double step) {
  const auto curve = bounds::bound_curve(pmin, pmax, step);
  std::ofstream file;
  std::ostream& os = open_output(opt, file);
  if (opt.format == "json") {
    json rows = json::array();
    for (const auto& pt : curve) {
      rows.push_back({{"p", pt.p}, {"k", pt.k}, {"C", pt.c_value}});
    }
    json maxima = json::array();
    for (int k = 2; k <= 6; ++k) {
      maxima.push_back({{"k", k}, {"p", bounds::c_max_location(k)}});
    }
    os << json{{"curve", rows},
               {"maximizers", maxima},
               {"uniform_bound", bounds::uniform_bound()}}
              .dump(2)
       << "\n";
  } else {
    os << "p,k,C\n";
    for (const auto& pt : curve) {
      os << fmt_num(pt.p, opt.precision) << "," << pt.k << ","
         << fmt_num(pt.c_value, opt.precision) << "\n";
    }
    if (opt.format != "csv") {
      os << "# uniform bound: " << fmt_num(bounds::uniform_bound(), 12)
         << "\n";
      for (int k = 2; k <= 6; ++k) {
        os << "# maximizer k=" << k << ": p = "
           << fmt_num(bounds::c_max_location(k), 12) << "\n";
      }
    }
  }
  return 0;
}

int run_ratio(const CommonOpts& opt) {
  const AnalyticFunction f = load_function(opt);
  norms::GridOptions grid{opt.n_rad, opt.n_angles, false};
  const double incl = bounds::inclusion_ratio(f, opt.alpha, opt.p, grid);
  const double beta = 0.5 * opt.p * (opt.alpha + 2.0) - 2.0;
  std::optional<double> bayart;
  if (beta > bounds::bayart_beta_threshold()) {
    bayart = bounds::bayart_step_ratio(f, opt.p, beta, grid);
  }
  std::ofstream file;
  std::ostream& os = open_output(opt, file);
  if (opt.format == "json") {
    json j{{"inclusion_ratio", incl},
           {"c_bound", bounds::c_bound(opt.p).c_value}};
    if (bayart) {
      j["bayart_step_ratio"] = *bayart;
      j["bayart_beta"] = beta;
    }
    os << j.dump(2) << "\n";
  } else {
    os << "inclusion ratio = " << fmt_num(incl, opt.precision)
       << "   (C(p) = " << fmt_num(bounds::c_bound(opt.p).c_value, 12)
       << ")\n";
    if (bayart) {
      os << "bayart step ratio (beta=" << fmt_num(beta, 6)
         << ") = " << fmt_num(*bayart, opt.precision) << "\n";
    }
  }
  return 0;
}

int run_search(const CommonOpts& opt, int degree, std::optional<int> vanish,
               int restarts, std::uint64_t seed,
               const std::vector<int>& sweep) {
  search::SearchConfig cfg;
  cfg.alpha = opt.alpha;
  cfg.p = opt.p;
  cfg.degree = degree;
  cfg.vanish_order = vanish;
  cfg.restarts = restarts;
  cfg.rng_seed = seed;
  cfg.n_rad = opt.n_rad;
  cfg.n_angles = opt.n_angles;

  std::ofstream file;
  std::ostream& os = open_output(opt, file);
  if (!sweep.empty()) {
    const auto cells = search::vanishing_sweep(cfg, sweep);
    json rows = json::array();
    for (const auto& c : cells) {
      rows.push_back({{"m", c.m}, {"best_value", c.best_value},
                      {"ok", c.ok}});
      if (opt.format == "human") {
        os << "m = " << c.m
           << "  best_value = " << fmt_num(c.best_value, opt.precision)
           << (c.ok ? "" : "  (failed)") << "\n";
      }
    }
    if (opt.format != "human") {
      os << rows.dump(2) << "\n";
    }
    return 0;
  }
  const search::SearchResult res = search::search_extremal(cfg);
  if (opt.format == "human") {
    os << "best_value = " << fmt_num(res.best_value, opt.precision) << "\n"
       << "constraint residual = " << fmt_num(res.constraint_residual, 3)
       << "\n"
       << "iterations = " << res.iterations_used
       << ", restarts = " << res.restarts_used << "\n";
  } else {
    os << spec_json::to_json(res, cfg).dump(2) << "\n";
  }
  const double ceiling = bounds::c_bound(cfg.p).c_value * (1.0 + 1e-6);
  if (res.best_value > ceiling) {
    std::cerr << "{\"error\":\"search exceeded C(p) ceiling\",\"value\":"
              << res.best_value << "}\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify: condensed invariant suite with one pass/fail line per check.

struct Verifier {
  int failures = 0;
  void check(const std::string& name, bool ok, double margin) {
    std::printf("%s  %-55s margin=%.3e\n", ok ? "PASS" : "FAIL",
                name.c_str(), margin);
    if (!ok) {
      ++failures;
    }
  }
};

CoeffVector random_poly_coeffs(std::mt19937_64& gen, int degree) {
  CoeffVector c(degree + 1);
  for (int i = 0; i <= degree; ++i) {
    const double u1 = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    const double u2 = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    c[i] = Complex(2.0 * u1 - 1.0, 2.0 * u2 - 1.0);
  }
  return c;
}

int run_verify(std::uint64_t seed) {
  Verifier v;
  std::mt19937_64 gen(seed);

  {  // Bound constants.
    double worst = 0.0;
    for (int k = 2; k <= 5; ++k) {
      worst = std::max(worst,
                       std::abs(bounds::c_bound(2.0 * k).c_value - 1.0));
    }
    v.check("C(2k) = 1 for k = 2..5", worst < 1e-14, worst);
    const double ub = bounds::uniform_bound();
    v.check("uniform bound = 1.02153...", std::abs(ub - 1.02153) < 5e-5,
            std::abs(ub - 1.02153));
    const double prev = std::sqrt(2.0 / (std::numbers::e * std::log(2.0)));
    v.check("uniform bound below sqrt(2/(e log 2))", ub < prev, prev - ub);
  }
  {  // Combinatorial identities.
    double worst = 0.0;
    for (const double a : {-1.0, 0.0, 0.5, 2.0}) {
      for (int k = 1; k <= 3; ++k) {
        for (int n : {1, 7, 25, 50}) {
          const auto bb = special::beta_binom_identity(n, k, a);
          worst = std::max(worst, std::abs(bb.lhs - bb.rhs) / bb.rhs);
          const auto cc = special::c_convolution_identity(n, k, a);
          worst = std::max(worst, std::abs(cc.lhs - cc.rhs) / cc.rhs);
        }
      }
    }
    v.check("beta-binomial / convolution identities", worst < 1e-12, worst);
  }
  {  // H function: branch agreement and p-monotonicity.
    double worst = 0.0;
    for (const double a : {-1.0, 0.0, 1.0}) {
      for (const double p : {2.0, 3.0, 6.0}) {
        const double c = 0.5 * p * (a + 2.0);
        const double lo = special::h_func(p, a, 0.5 - 1e-13);
        const double hi = special::h_func(p, a, 0.5 + 1e-13);
        worst = std::max(worst, std::abs(lo - hi) / hi);
        (void)c;
      }
    }
    v.check("h_func branch agreement at w = 0.5", worst < 1e-10, worst);
    double mono = 1.0;
    for (const double a : {-1.0, 0.5}) {
      for (const double w : {0.1, 0.5, 0.9}) {
        double prev = special::h_func(2.0, a, w);
        for (double p = 2.5; p <= 10.0; p += 0.5) {
          const double cur = special::h_func(p, a, w);
          mono = std::min(mono, cur - prev);
          prev = cur;
        }
      }
    }
    v.check("h_func nondecreasing in p", mono >= -1e-12, mono);
  }
  {  // Kernel extremality.
    double worst = 0.0;
    for (const double a : {-1.0, 0.0}) {
      for (const double p : {2.5, 4.0}) {
        for (const double z : {0.0, 0.5, 0.9}) {
          const double r =
              bounds::inclusion_ratio(normalized_kernel(z, a), a, p);
          worst = std::max(worst, std::abs(r - 1.0));
        }
      }
    }
    v.check("normalized-kernel inclusion ratio = 1", worst < 1e-6, worst);
  }
  {  // Isometry invariance.
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const CoeffVector c = random_poly_coeffs(gen, 6);
      const AnalyticFunction f = AnalyticFunction::polynomial(c);
      const double a = trial * 0.15;
      const Complex mob_a(0.3, 0.2 * trial / 5.0);
      const double alpha = a - 1.0;
      const AnalyticFunction tf = apply_isometry(mob_a, alpha, f);
      const double n0 = norms::a2_coeff_norm(f, alpha).value;
      const double n1 = norms::a2_coeff_norm(tf, alpha).value;
      worst = std::max(worst, std::abs(n1 - n0) / n0);
    }
    v.check("T_a preserves the A^2_alpha norm", worst < 1e-7, worst);
  }
  {  // Hardy-Stein residuals.
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const AnalyticFunction f =
          AnalyticFunction::polynomial(random_poly_coeffs(gen, 5));
      worst = std::max(
          worst, std::abs(norms::hardy_stein_residual(f, 3.5, 0.7)));
    }
    v.check("Hardy-Stein identity residual", worst < 1e-6, worst);
  }
  {  // Cross-method norm agreement.
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const AnalyticFunction f =
          AnalyticFunction::polynomial(random_poly_coeffs(gen, 8));
      for (const double alpha : {-0.5, 0.0, 1.0}) {
        const double q =
            norms::bergman_norm(f, SpaceParams{alpha, 2.0}).value;
        const double c = norms::a2_coeff_norm(f, alpha).value;
        worst = std::max(worst, std::abs(q - c) / c);
        // Even p keeps |f|^{p-2} smooth at interior zeros of f, so both
        // quadratures converge spectrally; odd p degrades to ~1e-6 on the
        // default grid and is exercised at looser tolerance elsewhere.
        const double h = norms::hs_norm(f, alpha, 4.0).value;
        const double b =
            norms::bergman_norm(f, SpaceParams{2.0 * (alpha + 2.0) - 2.0,
                                               4.0})
                .value;
        worst = std::max(worst, std::abs(h - b) / b);
      }
    }
    v.check("coefficient/quadrature/hardy-stein agreement", worst < 1e-7,
            worst);
  }
  {  // Contractive inclusions on a random corpus.
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const AnalyticFunction f =
          AnalyticFunction::polynomial(random_poly_coeffs(gen, 10));
      for (const double p : {1.0, 2.0}) {
        const double ratio =
            norms::bergman_norm(f, SpaceParams{0.0, 2.0 * p}).value /
            norms::hardy_norm(f, p).value;
        worst = std::max(worst, ratio - 1.0);
      }
      for (const int k : {2, 3}) {
        const double ratio =
            norms::bergman_norm(
                f, SpaceParams{k * 2.0 - 2.0, 2.0 * k})
                .value /
            norms::a2_coeff_norm(f, 0.0).value;
        worst = std::max(worst, ratio - 1.0);
      }
    }
    v.check("Carleman / extended Carleman contractivity", worst < 1e-9,
            worst);
  }
  {  // Point-evaluation bound.
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const AnalyticFunction f =
          AnalyticFunction::polynomial(random_poly_coeffs(gen, 6));
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      const Complex z(0.8 * u, -0.3 * u);
      worst = std::min(worst,
                       norms::point_bound_margin(f, SpaceParams{0.5, 3.0},
                                                 z));
    }
    v.check("point-evaluation bound margin >= 0", worst > -1e-9, worst);
  }

  std::printf("%s (%d failure%s)\n",
              v.failures == 0 ? "ALL CHECKS PASSED" : "CHECKS FAILED",
              v.failures, v.failures == 1 ? "" : "s");
  return v.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Norms, functionals and extremal searches for contractive "
               "inclusions of weighted Bergman spaces"};
  app.require_subcommand(1);

  CommonOpts opt;
  double pmin = 2.01, pmax = 10.0, step = 0.01;
  double rstep = 0.1;
  int degree = 16;
  int vanish = -1;
  int restarts = 8;
  std::uint64_t seed = 1;
  std::vector<int> sweep;

  auto* norm = app.add_subcommand("norm", "norm reports with cross-deltas");
  add_common(norm, opt, true);
  auto* functional =
      app.add_subcommand("functional", "F_p and G_p functionals");
  add_common(functional, opt, true);
  auto* hs =
      app.add_subcommand("hardy-stein", "Hardy-Stein residuals on an r grid");
  add_common(hs, opt, true);
  hs->add_option("--step", rstep, "r-grid spacing");
  auto* bounds_cmd = app.add_subcommand("bounds", "C(p) curve data");
  add_common(bounds_cmd, opt, false);
  bounds_cmd->add_option("--pmin", pmin, "curve start (> 2)");
  bounds_cmd->add_option("--pmax", pmax, "curve end");
  bounds_cmd->add_option("--step", step, "curve spacing");
  auto* ratio =
      app.add_subcommand("ratio", "inclusion and Bayart step ratios");
  add_common(ratio, opt, true);
  auto* search_cmd =
      app.add_subcommand("search", "extremal search on the coefficient sphere");
  add_common(search_cmd, opt, false);
  search_cmd->add_option("--degree", degree, "truncation degree");
  search_cmd->add_option("--vanish", vanish,
                         "pin coefficients 0..m to zero (-1 = none)");
  search_cmd->add_option("--restarts", restarts, "number of restarts");
  search_cmd->add_option("--seed", seed, "rng seed");
  search_cmd->add_option("--sweep", sweep,
                         "vanishing orders for a sweep (overrides --vanish)");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--seed", seed, "rng seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (norm->parsed()) {
      return run_norm(opt);
    }
    if (functional->parsed()) {
      return run_functional(opt);
    }
    if (hs->parsed()) {
      return run_hardy_stein(opt, rstep);
    }
    if (bounds_cmd->parsed()) {
      return run_bounds(opt, pmin, pmax, step);
    }
    if (ratio->parsed()) {
      return run_ratio(opt);
    }
    if (search_cmd->parsed()) {
      return run_search(opt, degree,
                        vanish >= 0 ? std::optional<int>(vanish)
                                    : std::nullopt,
                        restarts, seed, sweep);
    }
    if (verify->parsed()) {
      return run_verify(seed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
    return 1;
  }
  return 2;
}
