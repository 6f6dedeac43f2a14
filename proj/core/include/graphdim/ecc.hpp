#pragma once

#include "graphdim/cliques.hpp"
#include "graphdim/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace graphdim {

struct EccOptions {
    /// Branch nodes before the search gives up with ResourceLimit.
    std::uint64_t node_budget = 10'000'000;
    CliqueOptions cliques;
};

/// Set of cliques whose edge sets union to E(G).
struct CliqueCover {
    std::vector<VertexSet> cliques;
    /// Set when the input had no edges; `cliques` is then empty (theta_e = 0).
    bool edgeless = false;
    /// Branch nodes explored by the solver.
    std::uint64_t nodes = 0;

    std::size_t size() const { return cliques.size(); }
};

/// Exact minimum edge clique cover. Members are maximal cliques, sorted
/// lexicographically; the optimum returned is deterministic for a given graph.
CliqueCover min_edge_clique_cover(const Graph& g, const EccOptions& options = {});

/// theta_e(G).
std::size_t ecc_number(const Graph& g, const EccOptions& options = {});

struct CoverCheck {
    bool valid = false;
    std::vector<Edge> uncovered;
    /// Indices of cover members that do not induce a complete subgraph.
    std::vector<std::size_t> non_cliques;
};

CoverCheck verify_cover(const Graph& g, const std::vector<VertexSet>& cover);

/// Brute-force reference: smallest subfamily of the maximal cliques covering
/// every edge, found by trying all subsets in order of size. Throws
/// ResourceLimit when there are more than `max_candidates` maximal cliques.
std::size_t ecc_number_exhaustive(const Graph& g, std::size_t max_candidates = 24);

/// Every minimum cover drawn from the maximal cliques (same enumeration).
std::vector<std::vector<VertexSet>> all_minimum_covers_exhaustive(const Graph& g,
                                                                  std::size_t max_candidates = 20);

} // namespace graphdim
