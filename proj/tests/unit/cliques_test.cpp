#include "graphdim/cliques.hpp"
#include "graphdim/errors.hpp"
#include "graphdim/generators.hpp"

#include "support/graphs.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace graphdim {
namespace {

std::vector<std::vector<Vertex>> members(const std::vector<VertexSet>& cliques) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& c : cliques)
        out.push_back(c.to_vector());
    return out;
}

TEST(Cliques, DiamondHasTwoTriangles) {
    auto cs = members(maximal_cliques(testing::diamond()));
    EXPECT_EQ(cs, (std::vector<std::vector<Vertex>>{{0, 1, 2}, {1, 2, 3}}));
}

TEST(Cliques, IsolatedVerticesAreSingletons) {
    Graph g = Graph::from_edges(4, {{1, 2}});
    auto cs = members(maximal_cliques(g));
    EXPECT_EQ(cs, (std::vector<std::vector<Vertex>>{{0}, {1, 2}, {3}}));
}

TEST(Cliques, EmptyGraphHasNone) { EXPECT_TRUE(maximal_cliques(edgeless_graph(0)).empty()); }

TEST(Cliques, OutputIsLexicographic) {
    auto cs = maximal_cliques(petersen_graph());
    ASSERT_EQ(cs.size(), 15u);
    for (std::size_t i = 1; i < cs.size(); ++i)
        EXPECT_TRUE(lex_less(cs[i - 1], cs[i]));
}

TEST(Cliques, MatchSubsetOracle) {
    for (const Graph& g : testing::random_corpus(400, 8, 13))
        EXPECT_EQ(members(maximal_cliques(g)), testing::oracle_maximal_cliques(g));
}

TEST(Cliques, GuardRaisesResourceLimit) {
    CliqueOptions tight;
    tight.max_cliques = 3;
    EXPECT_THROW(maximal_cliques(petersen_graph(), tight), ResourceLimit);
    EXPECT_EQ(maximal_cliques(windmill(3), tight).size(), 3u);
}

TEST(Cliques, NumbersAndPurity) {
    Graph g = testing::k4_with_pendant();
    EXPECT_EQ(clique_number(g), 4u);
    EXPECT_EQ(min_clique_number(g), 2u);
    EXPECT_FALSE(is_pure(g));
    EXPECT_TRUE(is_pure(windmill(4)));
    EXPECT_TRUE(is_pure(cycle_graph(5)));
    EXPECT_TRUE(is_pure(complete_graph(1)));
    EXPECT_FALSE(is_pure(Graph::from_edges(3, {{0, 1}})));
    EXPECT_THROW(clique_number(edgeless_graph(0)), InvalidInput);
}

TEST(Cliques, StatsAgreeWithIndividualQueries) {
    for (const Graph& g : testing::random_corpus(100, 9, 19)) {
        CliqueStats s = clique_stats(g);
        EXPECT_EQ(s.omega, clique_number(g));
        EXPECT_EQ(s.gamma, min_clique_number(g));
        EXPECT_EQ(s.pure, is_pure(g));
    }
}

} // namespace
} // namespace graphdim
