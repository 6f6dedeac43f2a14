#include "graphdim/dimension.hpp"
#include "graphdim/errors.hpp"
#include "graphdim/generators.hpp"

#include "support/graphs.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace graphdim {
namespace {

using testing::oracle_dim_str;

Rational R(const char* s) { return Rational::parse(s); }

TEST(Dimension, EmptyGraphIsMinusOne) {
    EXPECT_EQ(dim(edgeless_graph(0)), Rational(-1));
    EXPECT_EQ(dim_unmemoized(edgeless_graph(0)), Rational(-1));
}

TEST(Dimension, CompleteGraphs) {
    for (std::size_t n = 1; n <= 9; ++n)
        EXPECT_EQ(dim(complete_graph(n)), Rational(static_cast<std::int64_t>(n) - 1)) << n;
}

TEST(Dimension, EdgelessGraphsAreZero) {
    for (std::size_t n = 1; n <= 6; ++n)
        EXPECT_EQ(dim(edgeless_graph(n)), Rational(0));
}

TEST(Dimension, CyclesPathsAndTreesAreOne) {
    for (std::size_t n = 4; n <= 12; ++n)
        EXPECT_EQ(dim(cycle_graph(n)), Rational(1)) << n;
    for (std::size_t n = 2; n <= 12; ++n)
        EXPECT_EQ(dim(path_graph(n)), Rational(1)) << n;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        EXPECT_EQ(dim(random_tree(15, seed)), Rational(1));
}

TEST(Dimension, TriangleIsTwo) { EXPECT_EQ(dim(cycle_graph(3)), Rational(2)); }

TEST(Dimension, KnownSmallValues) {
    struct Case {
        const char* name;
        Graph g;
        const char* expected;
    };
    const Case cases[] = {
        {"octahedron", testing::octahedron(), "2"},
        {"wheel4", testing::wheel4(), "2"},
        {"double K4 matching", double_clique_matching(4), "5/2"},
        {"double K3 matching", double_clique_matching(3), "5/3"},
        {"K4 + 4K1", disjoint_union(complete_graph(4), edgeless_graph(4)), "3/2"},
        {"K4 with pendant", testing::k4_with_pendant(), "5/2"},
        {"windmill 3", windmill(3), "2"},
        {"petersen", petersen_graph(), "1"},
        {"diamond", testing::diamond(), "2"},
        {"star clique 4/12", star_clique(4, 12), "7/5"},
    };
    for (const auto& c : cases) {
        ASSERT_EQ(oracle_dim_str(c.g), c.expected) << c.name;
        EXPECT_EQ(dim(c.g), R(c.expected)) << c.name;
        EXPECT_EQ(dim_unmemoized(c.g), R(c.expected)) << c.name;
    }
}

TEST(Dimension, VertexSpectrumOfK4WithPendant) {
    DimReport r = dim_spectrum(testing::k4_with_pendant());
    std::vector<Rational> expected{3, 3, 3, R("5/2"), 1};
    EXPECT_EQ(r.vertex_dims, expected);
    EXPECT_EQ(r.graph_dim, R("5/2"));
    EXPECT_FALSE(r.is_uniform);
    EXPECT_FALSE(r.is_pure);
    EXPECT_EQ(r.omega, 4u);
    EXPECT_EQ(r.gamma, 2u);
}

TEST(Dimension, UniformSpectra) {
    DimReport w = dim_spectrum(windmill(3));
    EXPECT_TRUE(w.is_uniform);
    EXPECT_TRUE(w.is_pure);
    EXPECT_EQ(w.graph_dim, Rational(2));
    DimReport p = dim_spectrum(petersen_graph());
    EXPECT_TRUE(p.is_uniform);
    for (const auto& d : p.vertex_dims)
        EXPECT_EQ(d, Rational(1));
}

TEST(Dimension, EmptySpectrum) {
    DimReport r = dim_spectrum(edgeless_graph(0));
    EXPECT_EQ(r.graph_dim, Rational(-1));
    EXPECT_TRUE(r.vertex_dims.empty());
}

TEST(Dimension, VertexDimIsBallDim) {
    for (const Graph& g : testing::random_corpus(60, 9, 11))
        for (Vertex v : g.vertices()) {
            Graph ball = unit_ball(g, v);
            EXPECT_EQ(vertex_dim(g, v), dim(ball));
        }
}

TEST(Dimension, VertexDimOutOfRangeThrows) {
    EXPECT_THROW(vertex_dim(complete_graph(3), 3), InvalidInput);
}

TEST(Dimension, MemoizedMatchesOracles) {
    for (const Graph& g : testing::random_corpus(150, 10, 5)) {
        Rational memo = dim(g);
        EXPECT_EQ(memo, dim_unmemoized(g));
        EXPECT_EQ(memo.str(), oracle_dim_str(g));
    }
}

TEST(Dimension, ThreadedMatchesSerial) {
    for (const Graph& g : testing::random_corpus(20, 22, 17)) {
        DimOptions threaded;
        threaded.threads = 4;
        EXPECT_EQ(dim(g, threaded), dim(g));
    }
}

TEST(Dimension, InvariantUnderRelabeling) {
    SeededRng rng(99);
    for (const Graph& g : testing::random_corpus(60, 10, 23)) {
        auto perm = rng.permutation(g.order());
        EXPECT_EQ(dim(relabel(g, perm)), dim(g));
    }
}

TEST(Dimension, TriangleFreeWithAnEdgeIsOne) {
    for (const Graph& g : testing::random_corpus(300, 10, 31)) {
        if (g.size() == 0 || !is_connected(g))
            continue;
        bool triangle = false;
        for (auto [u, v] : g.edges())
            if ((g.neighbors(u) & g.neighbors(v)).size() > 0)
                triangle = true;
        if (!triangle)
            EXPECT_EQ(dim(g), Rational(1));
    }
}

TEST(Dimension, SubsetQueriesShareTheCache) {
    DimensionEngine engine(double_clique_matching(4));
    EXPECT_EQ(engine.dim(), R("5/2"));
    const std::size_t cached = engine.cache_size();
    EXPECT_GT(cached, 0u);
    EXPECT_EQ(engine.dim(VertexSet(8, {0, 1, 2, 3})), Rational(3));
    EXPECT_EQ(engine.dim(VertexSet(8)), Rational(-1));
}

TEST(Dimension, ErdosRenyiRegressionValue) {
    Graph g = erdos_renyi(8, Rational(1, 2), 42);
    const std::string oracle = oracle_dim_str(g);
    EXPECT_EQ(dim(g).str(), oracle);
    EXPECT_EQ(oracle, "307/96");
}

TEST(Laws, JoinExamples) {
    // C4 + C4 and K3 + K2
    LawCheck a = check_join_law(cycle_graph(4), cycle_graph(4));
    EXPECT_TRUE(a.holds());
    EXPECT_EQ(a.lhs, Rational(3));
    LawCheck b = check_join_law(complete_graph(3), complete_graph(2));
    EXPECT_TRUE(b.holds());
    EXPECT_EQ(b.lhs, Rational(4));
}

TEST(Laws, JoinWithEmptyGraph) {
    LawCheck c = check_join_law(petersen_graph(), edgeless_graph(0));
    EXPECT_TRUE(c.holds());
    EXPECT_EQ(c.lhs, Rational(1));
}

TEST(Laws, JoinOnRandomPairs) {
    auto left = testing::random_corpus(40, 6, 41);
    auto right = testing::random_corpus(40, 6, 43);
    for (std::size_t i = 0; i < left.size(); ++i)
        EXPECT_TRUE(check_join_law(left[i], right[i]).holds());
}

TEST(Laws, IteratedJoin) {
    std::vector<Graph> parts{edgeless_graph(2), edgeless_graph(2), edgeless_graph(2)};
    LawCheck c = check_iterated_join_law(parts);
    EXPECT_TRUE(c.holds());
    EXPECT_EQ(c.lhs, Rational(2));
    EXPECT_THROW(check_iterated_join_law(std::span<const Graph>{}), InvalidInput);
}

TEST(Laws, DisjointUnion) {
    std::vector<Graph> parts{complete_graph(4), edgeless_graph(4)};
    LawCheck c = check_disjoint_union_law(parts);
    EXPECT_TRUE(c.holds());
    EXPECT_EQ(c.lhs, R("3/2"));
    auto random = testing::random_corpus(12, 7, 47);
    EXPECT_TRUE(check_disjoint_union_law(random).holds());
}

} // namespace
} // namespace graphdim
