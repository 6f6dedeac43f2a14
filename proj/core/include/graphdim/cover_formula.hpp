#pragma once

#include "graphdim/dimension.hpp"
#include "graphdim/ecc.hpp"
#include "graphdim/graph.hpp"
#include "graphdim/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace graphdim {

/// Cover indices are 0-based positions in the cover.
using Signature = std::vector<std::size_t>;

/// counts[T] = number of vertices lying in exactly the cover cliques indexed
/// by T. Only nonzero entries are stored.
struct SignatureCounts {
    std::map<Signature, std::size_t> counts;
    std::size_t total = 0;

    std::size_t at(const Signature& t) const {
        auto it = counts.find(t);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Direct per-vertex membership. Throws InvalidInput if a vertex lies in no
/// cover clique.
SignatureCounts signature_counts(const Graph& g, const std::vector<VertexSet>& cover);

/// Same counts via alternating sums of intersection orders over supersets.
/// Limited to covers of at most 16 cliques.
SignatureCounts signature_counts_inclusion_exclusion(const Graph& g,
                                                     const std::vector<VertexSet>& cover);

/// Minimum edge clique cover extended by a singleton for every isolated
/// vertex, so that every vertex lies in some member.
std::vector<VertexSet> vertex_complete_min_cover(const Graph& g, const EccOptions& options = {});

/// Both sides of the minimum-cover dimension identity
///   (|G| - |K_L|) dim G = sum over proper nonempty T of counts[T] dim G[U_T]
/// with K_L the common intersection and U_T the union of the cliques in T.
struct CoverIdentity {
    Rational lhs;
    Rational rhs;
    std::size_t cover_size = 0;
    std::size_t common_order = 0;  // |K_L|
    bool holds() const { return lhs == rhs; }
};

/// `engine` must be built over g; one is created when null.
CoverIdentity evaluate_cover_identity(const Graph& g, const std::vector<VertexSet>& cover,
                                      DimensionEngine* engine = nullptr);

/// rhs / (|G| - |K_L|); |V_1| - 1 for a single clique.
Rational dim_via_cover(const Graph& g, const std::vector<VertexSet>& cover,
                       DimensionEngine* engine = nullptr);

/// lhs = (|G| - |V1 n V2|) dim G, rhs = ||V1|| dim K_V1 + ||V2|| dim K_V2.
/// Throws InvalidInput unless theta_e(G) = 2.
LawCheck check_two_clique_lemma(const Graph& g);

struct PureCheck {
    Rational dim;
    Rational expected;
    bool vertex_dims_ok = false;
    bool holds() const { return dim == expected && vertex_dims_ok; }
};

/// For a pure graph with clique order N: dim, N - 1, and whether every vertex
/// dimension equals N - 1. Throws InvalidInput when g is empty or not pure.
PureCheck check_pure_corollary(const Graph& g);

struct BoundsReport {
    std::size_t omega = 0;
    std::size_t gamma = 0;
    bool connected = false;
    Rational dim;
    Rational lower_basic;                    // k(k-1)/|G|
    std::optional<Rational> lower_connected;  // connected graphs with k >= 2
    Rational lower_gamma;                    // gamma - 1, asserted for connected graphs
    Rational upper;                          // k - 1
    bool saturated_lower = false;
    bool saturated_lower_connected = false;
    bool saturated_upper = false;

    /// Human-readable list of violated inequalities; empty when all hold.
    std::vector<std::string> violations() const;
};

/// Throws InvalidInput on the empty graph.
BoundsReport bounds_report(const Graph& g);
BoundsReport bounds_report(const Graph& g, const Rational& known_dim);

/// 1 + k^2(k-1)(k-2) / (n (k(k-2) + n)).
Rational connected_lower_bound(std::size_t k, std::size_t n);

} // namespace graphdim
