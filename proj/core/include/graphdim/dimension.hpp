#pragma once

#include "graphdim/graph.hpp"
#include "graphdim/rational.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace graphdim {

struct DimOptions {
    /// false selects the brute-force reference evaluation: plain recursion on
    /// freshly built sphere graphs, no cache. Exponential; meant as an oracle.
    bool memoize = true;
    /// Worker threads for the top-level vertex sum (memoized mode only).
    unsigned threads = 1;
};

/// Evaluates the inductive dimension of induced subgraphs of one host graph.
///
/// dim(empty) = -1 and otherwise dim(G) is the mean over v of
/// 1 + dim(S(v)), S(v) the unit sphere. Every sphere of an induced subgraph
/// is again an induced subgraph of the host, so results are cached by host
/// vertex subset. The cache is shared by all calls on the same engine and is
/// safe under the engine's own worker threads.
class DimensionEngine {
public:
    explicit DimensionEngine(Graph host, DimOptions options = {});
    ~DimensionEngine();
    DimensionEngine(DimensionEngine&&) noexcept;
    DimensionEngine& operator=(DimensionEngine&&) noexcept;

    const Graph& host() const { return host_; }

    Rational dim();
    /// Dimension of the subgraph induced on `subset` (a subset of host vertices).
    Rational dim(const VertexSet& subset);
    /// 1 + dim of the unit sphere of v in the host.
    Rational vertex_dim(Vertex v);

    std::size_t cache_size() const;

private:
    struct Cache;

    Rational dim_subset(const VertexSet& s);
    Rational dim_top_level(const VertexSet& s);

    Graph host_;
    DimOptions options_;
    std::unique_ptr<Cache> cache_;
};

Rational dim(const Graph& g, const DimOptions& options = {});
Rational vertex_dim(const Graph& g, Vertex v, const DimOptions& options = {});

/// Reference evaluation with no caching, recursing on sphere graphs.
Rational dim_unmemoized(const Graph& g);

struct DimReport {
    Rational graph_dim;
    std::vector<Rational> vertex_dims;
    bool is_uniform = true;
    /// Clique statistics; zero / false for the empty graph.
    bool is_pure = false;
    std::size_t omega = 0;
    std::size_t gamma = 0;
};

DimReport dim_spectrum(const Graph& g, const DimOptions& options = {});

/// Two evaluations of the same quantity; a law holds iff they are equal.
struct LawCheck {
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs == rhs; }
};

/// lhs: dim of the disjoint union; rhs: order-weighted mean of component dims.
LawCheck check_disjoint_union_law(std::span<const Graph> components);
/// lhs: dim(G1 + G2); rhs: 1 + dim G1 + dim G2.
LawCheck check_join_law(const Graph& g1, const Graph& g2);
/// lhs: dim(G1 + ... + Gk); rhs: (k - 1) + sum dim Gi.
LawCheck check_iterated_join_law(std::span<const Graph> parts);

} // namespace graphdim
