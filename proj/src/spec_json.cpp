#include "bergman/spec_json.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

namespace bergman::spec_json {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument("function spec at " + path + ": " + what);
}

Complex parse_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    fail(path, "expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

AnalyticFunction parse_node(const json& j, const std::string& path) {
  if (!j.is_object()) {
    fail(path, "expected an object");
  }
  const std::string type = j.value("type", "");
  if (type == "polynomial") {
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
      fail(path, "polynomial requires a coeffs array");
    }
    const auto& arr = j["coeffs"];
    CoeffVector coeffs(std::max<std::size_t>(arr.size(), 1));
    coeffs.setZero();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      coeffs[static_cast<Eigen::Index>(i)] =
          parse_complex(arr[i], path + ".coeffs[" + std::to_string(i) + "]");
    }
    return AnalyticFunction::polynomial(std::move(coeffs));
  }
  if (type == "kernel") {
    if (!j.contains("zeta") || !j.contains("alpha")) {
      fail(path, "kernel requires zeta and alpha");
    }
    const Complex zeta = parse_complex(j["zeta"], path + ".zeta");
    if (std::abs(zeta) >= 1.0) {
      fail(path + ".zeta", "|zeta| must be < 1");
    }
    const double alpha = j["alpha"].get<double>();
    if (!(alpha >= -1.0)) {
      fail(path + ".alpha", "alpha must be >= -1");
    }
    const bool normalized = j.value("normalized", false);
    AnalyticFunction f =
        normalized ? normalized_kernel(zeta, alpha) : kernel(zeta, alpha);
    if (j.contains("scale")) {
      f = AnalyticFunction::scaled(f, parse_complex(j["scale"],
                                                    path + ".scale"));
    }
    return f;
  }
  if (type == "power") {
    if (!j.contains("k") || !j.contains("inner")) {
      fail(path, "power requires k and inner");
    }
    const int k = j["k"].get<int>();
    if (k < 1) {
      fail(path + ".k", "k must be >= 1");
    }
    return AnalyticFunction::power(parse_node(j["inner"], path + ".inner"),
                                   k);
  }
  if (type == "isometry") {
    if (!j.contains("a") || !j.contains("alpha") || !j.contains("inner")) {
      fail(path, "isometry requires a, alpha and inner");
    }
    const Complex a = parse_complex(j["a"], path + ".a");
    if (std::abs(a) >= 1.0) {
      fail(path + ".a", "|a| must be < 1");
    }
    const double alpha = j["alpha"].get<double>();
    if (!(alpha >= -1.0)) {
      fail(path + ".alpha", "alpha must be >= -1");
    }
    return apply_isometry(a, alpha,
                          parse_node(j["inner"], path + ".inner"));
  }
  fail(path, "unknown node type '" + type + "'");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

const char* method_name(norms::Method m) {
  switch (m) {
    case norms::Method::coefficient:
      return "coefficient";
    case norms::Method::quadrature:
      return "quadrature";
    case norms::Method::hardy_stein:
      return "hardy_stein";
  }
  return "unknown";
}

}  // namespace

AnalyticFunction parse_function(const json& doc) {
  return parse_node(doc, "$");
}

AnalyticFunction parse_function_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("function spec: ") + e.what());
  }
  return parse_function(doc);
}

json polynomial_spec(const CoeffVector& coeffs) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    arr.push_back(complex_to_json(coeffs[i]));
  }
  return json{{"type", "polynomial"}, {"coeffs", arr}};
}

json to_json(const norms::NormReport& rep) {
  json j{{"value", rep.value},
         {"alpha", rep.space.alpha},
         {"p", rep.space.p},
         {"method", method_name(rep.method)}};
  if (rep.method == norms::Method::coefficient) {
    j["series_len"] = rep.series_len;
  } else {
    j["n_rad"] = rep.n_rad;
    j["n_angles"] = rep.n_angles;
    j["refinement_delta"] = rep.refinement_delta;
  }
  return j;
}

json to_json(const search::SearchResult& res,
             const search::SearchConfig& cfg) {
  json j;
  j["best_value"] = res.best_value;
  j["constraint_residual"] = res.constraint_residual;
  j["iterations_used"] = res.iterations_used;
  j["restarts_used"] = res.restarts_used;
  j["converged"] = res.converged;
  j["value_history"] = res.value_history;
  j["best_function"] = polynomial_spec(res.best_coeffs);
  j["config"] = {
      {"alpha", cfg.alpha},
      {"p", cfg.p},
      {"degree", cfg.degree},
      {"vanish_order", cfg.vanish_order ? json(*cfg.vanish_order) : json()},
      {"objective", cfg.objective == search::Objective::target_norm
                        ? "target_norm"
                        : cfg.objective == search::Objective::functional_F
                              ? "functional_F"
                              : "functional_G"},
      {"restarts", cfg.restarts},
      {"max_iters", cfg.max_iters},
      {"rng_seed", cfg.rng_seed},
      {"n_rad", cfg.n_rad},
      {"n_angles", cfg.n_angles}};
  return j;
}

}  // namespace bergman::spec_json
