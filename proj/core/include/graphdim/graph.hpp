#pragma once

#include "graphdim/vertex_set.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace graphdim {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph over the dense vertex ids 0..n-1.
///
/// Immutable after construction: every operation that changes structure
/// returns a new Graph. Adjacency is symmetric and irreflexive.
class Graph {
public:
    Graph() = default;

    /// Duplicate edges collapse. Throws InvalidInput on an endpoint >= n or a
    /// self-loop.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    const VertexSet& neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

    VertexSet vertices() const { return VertexSet::full(order()); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    /// Degrees sorted non-increasing.
    std::vector<std::size_t> degree_sequence() const;

    bool is_clique(const VertexSet& s) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    friend class GraphBuilder;
    explicit Graph(std::vector<VertexSet> adj);

    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

/// Induced subgraph plus the map from new ids back to host ids
/// (`to_host[new_id] == host_id`, ascending).
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& members);

/// Subgraph induced on the neighbors of v.
Graph unit_sphere(const Graph& g, Vertex v);
/// Subgraph induced on v and its neighbors.
Graph unit_ball(const Graph& g, Vertex v);

/// Zykov sum: disjoint copies of g1 and g2 plus every cross edge. Vertices of
/// g2 are shifted by |g1|.
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);

/// Relabels vertex v to perm[v]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

std::vector<Vertex> isolated_vertices(const Graph& g);

Graph complete_graph(std::size_t n);
Graph edgeless_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph petersen_graph();

} // namespace graphdim
