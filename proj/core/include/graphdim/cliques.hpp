#pragma once

#include "graphdim/graph.hpp"

#include <cstddef>
#include <vector>

namespace graphdim {

struct CliqueOptions {
    /// Enumeration aborts with ResourceLimit once this many cliques are found.
    std::size_t max_cliques = 1'000'000;
};

/// Every inclusion-maximal clique of g, isolated vertices included as
/// singletons, sorted lexicographically by member list.
std::vector<VertexSet> maximal_cliques(const Graph& g, const CliqueOptions& options = {});

/// omega(G): order of the largest maximal clique. Throws on the empty graph.
std::size_t clique_number(const Graph& g);
/// gamma(G): order of the smallest maximal clique. Throws on the empty graph.
std::size_t min_clique_number(const Graph& g);
/// True iff all maximal cliques have the same order. Throws on the empty graph.
bool is_pure(const Graph& g);

struct CliqueStats {
    std::size_t omega = 0;
    std::size_t gamma = 0;
    bool pure = false;
};

/// One enumeration for all three statistics. Throws on the empty graph.
CliqueStats clique_stats(const Graph& g);
CliqueStats clique_stats(const std::vector<VertexSet>& cliques);

} // namespace graphdim
