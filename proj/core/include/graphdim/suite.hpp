#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace graphdim {

struct SuiteOptions {
    /// Largest order of the seeded random connected corpus (cover identity,
    /// bounds, cover optimality).
    std::size_t max_n = 8;
    /// Size of that random corpus.
    std::size_t samples = 500;
    std::uint64_t seed = 20240917;
    /// Optional graph6 file (one graph per line) of connected graphs, used in
    /// addition to the random corpus; only orders 2..7 are taken from it.
    std::optional<std::string> corpus_path;
    /// Criteria run concurrently on this many threads; results keep their order.
    unsigned threads = 1;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::size_t checks = 0;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    bool all_passed() const;
};

constexpr int kCriterionCount = 11;

/// Runs one acceptance criterion (1..kCriterionCount).
CriterionResult run_criterion(int id, const SuiteOptions& options);
SuiteResult run_suite(const SuiteOptions& options);

} // namespace graphdim
