#ifndef BERGMAN_SPEC_JSON_HPP_
#define BERGMAN_SPEC_JSON_HPP_

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "bergman/funcspace.hpp"
#include "bergman/norms.hpp"
#include "bergman/search.hpp"

namespace bergman::spec_json {

/// Parses a function-spec document (tree of polynomial / kernel / power /
/// isometry nodes). Rejects |zeta| >= 1 and |a| >= 1 with a diagnostic
/// naming the offending node path.
AnalyticFunction parse_function(const nlohmann::json& doc);
AnalyticFunction parse_function_string(const std::string& text);

/// Coefficients back to the polynomial node format, so search output can be
/// re-ingested.
nlohmann::json polynomial_spec(const CoeffVector& coeffs);

nlohmann::json to_json(const norms::NormReport& report);
nlohmann::json to_json(const search::SearchResult& result,
                       const search::SearchConfig& config);

}  // namespace bergman::spec_json

#endif  // BERGMAN_SPEC_JSON_HPP_
