#include "graphdim/graph.hpp"

#include "graphdim/errors.hpp"

#include <algorithm>
#include <string>

namespace graphdim {

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : adj_(n, VertexSet(n)) {}

    void add_edge(Vertex u, Vertex v) {
        const std::size_t n = adj_.size();
        if (u >= n || v >= n)
            throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") has an endpoint out of range for " + std::to_string(n) +
                               " vertices");
        if (u == v)
            throw InvalidInput("self-loop at vertex " + std::to_string(u));
        adj_[u].insert(v);
        adj_[v].insert(u);
    }

    Graph build() && { return Graph(std::move(adj_)); }

private:
    std::vector<VertexSet> adj_;
};

Graph::Graph(std::vector<VertexSet> adj) : adj_(std::move(adj)) {
    std::size_t degree_sum = 0;
    for (const auto& nb : adj_)
        degree_sum += nb.size();
    edge_count_ = degree_sum / 2;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

const VertexSet& Graph::neighbors(Vertex v) const {
    if (v >= adj_.size())
        throw InvalidInput("vertex " + std::to_string(v) + " out of range for graph of order " +
                           std::to_string(adj_.size()));
    return adj_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v = adj_[u].next(u + 1); v < adj_.size(); v = adj_[u].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

std::vector<std::size_t> Graph::degree_sequence() const {
    std::vector<std::size_t> d;
    d.reserve(adj_.size());
    for (const auto& nb : adj_)
        d.push_back(nb.size());
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

bool Graph::is_clique(const VertexSet& s) const {
    for (Vertex v : s) {
        VertexSet others = s;
        others.erase(v);
        if (!others.is_subset_of(neighbors(v)))
            return false;
    }
    return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& members) {
    if (members.universe() != g.order())
        throw InvalidInput("vertex set universe " + std::to_string(members.universe()) +
                           " does not match graph order " + std::to_string(g.order()));
    InducedSubgraph out;
    out.to_host = members.to_vector();
    const std::size_t k = out.to_host.size();

    std::vector<Vertex> to_local(g.order(), k);
    for (Vertex i = 0; i < k; ++i)
        to_local[out.to_host[i]] = i;

    GraphBuilder b(k);
    for (Vertex i = 0; i < k; ++i) {
        const VertexSet& nb = g.neighbors(out.to_host[i]);
        for (Vertex j = i + 1; j < k; ++j)
            if (nb.contains(out.to_host[j]))
                b.add_edge(i, j);
    }
    out.graph = std::move(b).build();
    return out;
}

Graph unit_sphere(const Graph& g, Vertex v) {
    return induced_subgraph(g, g.neighbors(v)).graph;
}

Graph unit_ball(const Graph& g, Vertex v) {
    VertexSet s = g.neighbors(v);
    s.insert(v);
    return induced_subgraph(g, s).graph;
}

namespace {

void copy_edges(GraphBuilder& b, const Graph& g, Vertex offset) {
    for (auto [u, v] : g.edges())
        b.add_edge(u + offset, v + offset);
}

} // namespace

Graph join(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.order(), n2 = g2.order();
    GraphBuilder b(n1 + n2);
    copy_edges(b, g1, 0);
    copy_edges(b, g2, n1);
    for (Vertex u = 0; u < n1; ++u)
        for (Vertex v = 0; v < n2; ++v)
            b.add_edge(u, n1 + v);
    return std::move(b).build();
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    GraphBuilder b(g1.order() + g2.order());
    copy_edges(b, g1, 0);
    copy_edges(b, g2, g1.order());
    return std::move(b).build();
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    const std::size_t n = g.order();
    if (perm.size() != n)
        throw InvalidInput("permutation length does not match graph order");
    VertexSet seen(n);
    for (Vertex p : perm) {
        if (p >= n || seen.contains(p))
            throw InvalidInput("relabeling is not a permutation");
        seen.insert(p);
    }
    GraphBuilder b(n);
    for (auto [u, v] : g.edges())
        b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<VertexSet> out;
    VertexSet unvisited = VertexSet::full(n);
    for (Vertex root = unvisited.first(); root < n; root = unvisited.first()) {
        VertexSet comp(n);
        VertexSet frontier(n, {root});
        while (!frontier.empty()) {
            comp |= frontier;
            unvisited -= frontier;
            VertexSet next(n);
            for (Vertex v : frontier)
                next |= g.neighbors(v);
            next &= unvisited;
            frontier = std::move(next);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.neighbors(v).empty())
            out.push_back(v);
    return out;
}

Graph complete_graph(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph edgeless_graph(std::size_t n) {
    return std::move(GraphBuilder(n)).build();
}

Graph cycle_graph(std::size_t n) {
    if (n < 3)
        throw InvalidInput("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

Graph path_graph(std::size_t n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph petersen_graph() {
    // outer 5-cycle 0..4, spokes to 5..9, inner pentagram
    GraphBuilder b(10);
    for (Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return std::move(b).build();
}

} // namespace graphdim
