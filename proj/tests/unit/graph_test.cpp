#include "graphdim/errors.hpp"
#include "graphdim/graph.hpp"

#include "support/graphs.hpp"

#include <gtest/gtest.h>

namespace graphdim {
namespace {

TEST(Graph, FromEdgesDeduplicates) {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
    EXPECT_EQ(g.order(), 3u);
    EXPECT_EQ(g.size(), 2u);
    EXPECT_TRUE(g.adjacent(1, 0));
    EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(Graph, FromEdgesRejectsLoopsAndRange) {
    EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), InvalidInput);
    EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), InvalidInput);
}

TEST(Graph, EdgesAreSortedPairs) {
    Graph g = Graph::from_edges(4, {{3, 2}, {1, 0}, {2, 0}});
    std::vector<Edge> expected{{0, 1}, {0, 2}, {2, 3}};
    EXPECT_EQ(g.edges(), expected);
    EXPECT_EQ(g.degree_sequence(), (std::vector<std::size_t>{2, 2, 1, 1}));
}

TEST(Graph, NamedGraphs) {
    EXPECT_EQ(complete_graph(5).size(), 10u);
    EXPECT_EQ(edgeless_graph(4).size(), 0u);
    EXPECT_EQ(cycle_graph(6).size(), 6u);
    EXPECT_EQ(path_graph(6).size(), 5u);
    Graph p = petersen_graph();
    EXPECT_EQ(p.order(), 10u);
    EXPECT_EQ(p.size(), 15u);
    for (Vertex v : p.vertices())
        EXPECT_EQ(p.degree(v), 3u);
    EXPECT_THROW(cycle_graph(2), InvalidInput);
}

TEST(Graph, InducedSubgraphRelabelsInAscendingOrder) {
    Graph g = testing::k4_with_pendant();
    auto sub = induced_subgraph(g, VertexSet(5, {1, 3, 4}));
    EXPECT_EQ(sub.to_host, (std::vector<Vertex>{1, 3, 4}));
    EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, SphereAndBall) {
    Graph g = testing::k4_with_pendant();
    Graph s = unit_sphere(g, 3);
    EXPECT_EQ(s, induced_subgraph(g, VertexSet(5, {0, 1, 2, 4})).graph);
    EXPECT_EQ(s.size(), 3u);
    Graph b = unit_ball(g, 4);
    EXPECT_EQ(b, complete_graph(2));
    EXPECT_EQ(unit_sphere(edgeless_graph(2), 0).order(), 0u);
}

TEST(Graph, JoinExamples) {
    EXPECT_EQ(join(complete_graph(1), complete_graph(1)), complete_graph(2));
    Graph c4 = join(edgeless_graph(2), edgeless_graph(2));
    EXPECT_EQ(c4.size(), 4u);
    for (Vertex v : c4.vertices())
        EXPECT_EQ(c4.degree(v), 2u);
    Graph w = testing::wheel4();
    EXPECT_EQ(w.order(), 5u);
    EXPECT_EQ(w.size(), 8u);
    EXPECT_EQ(w.degree(4), 4u);
}

TEST(Graph, DisjointUnionAndComponents) {
    Graph g = disjoint_union(complete_graph(3), path_graph(2));
    EXPECT_EQ(g.order(), 5u);
    auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].to_vector(), (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(comps[1].to_vector(), (std::vector<Vertex>{3, 4}));
    EXPECT_FALSE(is_connected(g));
    EXPECT_TRUE(is_connected(complete_graph(1)));
}

TEST(Graph, IsolatedVertices) {
    Graph g = Graph::from_edges(4, {{1, 2}});
    EXPECT_EQ(isolated_vertices(g), (std::vector<Vertex>{0, 3}));
}

TEST(Graph, ComplementOfCycleFive) {
    Graph c = complement(cycle_graph(5));
    EXPECT_EQ(c.size(), 5u);
    EXPECT_TRUE(c.adjacent(0, 2));
    EXPECT_FALSE(c.adjacent(0, 1));
}

TEST(Graph, RelabelPreservesStructure) {
    Graph g = testing::k4_with_pendant();
    Graph r = relabel(g, std::vector<Vertex>{4, 3, 2, 1, 0});
    EXPECT_EQ(r.size(), g.size());
    EXPECT_TRUE(r.adjacent(0, 1));
    EXPECT_EQ(r.degree(1), 4u);
    EXPECT_THROW(relabel(g, std::vector<Vertex>{0, 0, 1, 2, 3}), InvalidInput);
}

TEST(Graph, IsClique) {
    Graph g = testing::diamond();
    EXPECT_TRUE(g.is_clique(VertexSet(4, {0, 1, 2})));
    EXPECT_FALSE(g.is_clique(VertexSet(4, {0, 1, 2, 3})));
}

} // namespace
} // namespace graphdim
