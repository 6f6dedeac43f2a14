#include "graphdim/ecc.hpp"
#include "graphdim/errors.hpp"
#include "graphdim/generators.hpp"

#include "support/graphs.hpp"

#include <gtest/gtest.h>

namespace graphdim {
namespace {

TEST(Ecc, SmallKnownValues) {
    EXPECT_EQ(ecc_number(complete_graph(1)), 0u);
    for (std::size_t n = 2; n <= 7; ++n)
        EXPECT_EQ(ecc_number(complete_graph(n)), 1u);
    EXPECT_EQ(ecc_number(cycle_graph(4)), 4u);
    EXPECT_EQ(ecc_number(cycle_graph(3)), 1u);
    EXPECT_EQ(ecc_number(testing::bowtie()), 2u);
    EXPECT_EQ(ecc_number(testing::diamond()), 2u);
    EXPECT_EQ(ecc_number(windmill(3)), 3u);
    EXPECT_EQ(ecc_number(petersen_graph()), 15u);
    EXPECT_EQ(ecc_number(testing::octahedron()), 4u);
    EXPECT_EQ(ecc_number(double_clique_matching(4)), 6u);
}

TEST(Ecc, EdgelessCoverIsEmpty) {
    CliqueCover c = min_edge_clique_cover(edgeless_graph(4));
    EXPECT_TRUE(c.edgeless);
    EXPECT_EQ(c.size(), 0u);
}

TEST(Ecc, CoverIsValidAndSorted) {
    for (const Graph& g : testing::random_corpus(200, 9, 29)) {
        CliqueCover c = min_edge_clique_cover(g);
        EXPECT_TRUE(verify_cover(g, c.cliques).valid);
        for (std::size_t i = 1; i < c.cliques.size(); ++i)
            EXPECT_TRUE(lex_less(c.cliques[i - 1], c.cliques[i]));
    }
}

TEST(Ecc, MatchesExhaustiveSearch) {
    std::size_t compared = 0;
    for (const Graph& g : testing::random_corpus(250, 8, 37)) {
        std::size_t exhaustive = 0;
        try {
            exhaustive = ecc_number_exhaustive(g);
        } catch (const ResourceLimit&) {
            continue;
        }
        EXPECT_EQ(ecc_number(g), exhaustive);
        ++compared;
    }
    EXPECT_GT(compared, 200u);
}

TEST(Ecc, SolverIsDeterministic) {
    Graph g = erdos_renyi(14, Rational(1, 2), 5);
    auto a = min_edge_clique_cover(g);
    auto b = min_edge_clique_cover(g);
    EXPECT_EQ(a.cliques, b.cliques);
    EXPECT_EQ(a.nodes, b.nodes);
}

TEST(Ecc, NodeBudget) {
    EccOptions tight;
    tight.node_budget = 1;
    EXPECT_THROW(min_edge_clique_cover(erdos_renyi(16, Rational(1, 2), 3), tight),
                 ResourceLimit);
}

TEST(Ecc, VerifyCoverReportsProblems) {
    Graph g = testing::diamond();
    CoverCheck ok = verify_cover(g, {VertexSet(4, {0, 1, 2}), VertexSet(4, {1, 2, 3})});
    EXPECT_TRUE(ok.valid);

    CoverCheck missing = verify_cover(g, {VertexSet(4, {0, 1, 2})});
    EXPECT_FALSE(missing.valid);
    EXPECT_EQ(missing.uncovered, (std::vector<Edge>{{1, 3}, {2, 3}}));

    CoverCheck bad = verify_cover(g, {VertexSet(4, {0, 1, 2, 3})});
    EXPECT_FALSE(bad.valid);
    EXPECT_EQ(bad.non_cliques, std::vector<std::size_t>{0});

    EXPECT_THROW(verify_cover(g, {VertexSet(5, {0, 1})}), InvalidInput);
}

TEST(Ecc, AllMinimumCoversOfC4) {
    auto covers = all_minimum_covers_exhaustive(cycle_graph(4));
    ASSERT_EQ(covers.size(), 1u);
    EXPECT_EQ(covers[0].size(), 4u);
}

} // namespace
} // namespace graphdim
