#pragma once

#include "graphdim/cover_formula.hpp"
#include "graphdim/dimension.hpp"
#include "graphdim/graph.hpp"
#include "graphdim/suite.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace graphdim::cli {

/// {"exact": "p/q", "decimal": <6 significant digits, display only>}
nlohmann::json rational_json(const Rational& r);

struct ReportOptions {
    std::optional<std::string> label;
    EccOptions ecc;
    DimOptions dim;
    /// Wall-clock timings break byte-for-byte reproducibility, so they are opt-in.
    bool timings = false;
};

/// Full analysis: summary, dimensions, clique statistics, minimum cover,
/// cover identity, and bounds. Keys are sorted; rationals are strings.
nlohmann::json analysis_report(const Graph& g, const ReportOptions& options);

nlohmann::json bounds_json(const BoundsReport& b);
nlohmann::json suite_json(const SuiteResult& result, const SuiteOptions& options);

} // namespace graphdim::cli
