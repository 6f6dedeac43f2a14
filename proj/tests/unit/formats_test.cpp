#include "graphdim/errors.hpp"
#include "graphdim/formats.hpp"
#include "graphdim/generators.hpp"

#include "support/graphs.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace graphdim {
namespace {

TEST(Graph6, KnownStrings) {
    EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
    EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
    EXPECT_EQ(parse_graph6("?").order(), 0u);
    EXPECT_EQ(parse_graph6(">>graph6<<Bw"), complete_graph(3));
    EXPECT_EQ(serialize_graph6(complete_graph(3)), "Bw");
    EXPECT_EQ(serialize_graph6(edgeless_graph(0)), "?");
    EXPECT_EQ(serialize_graph6(petersen_graph()).size(), 1u + 8u);
}

TEST(Graph6, MalformedInput) {
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("B"), ParseError);   // truncated
    EXPECT_THROW(parse_graph6("Bww"), ParseError); // trailing
    EXPECT_THROW(parse_graph6("Bx"), ParseError);  // padding bit set
    EXPECT_THROW(parse_graph6("B "), ParseError);  // out of range
}

TEST(Graph6, AgreesWithReferenceDecoder) {
    for (const Graph& g : testing::random_corpus(200, 30, 71)) {
        const std::string s = serialize_graph6(g);
        auto [n, edges] = testing::oracle_decode_graph6(s);
        EXPECT_EQ(n, g.order());
        EXPECT_EQ(edges, g.edges());
    }
}

TEST(Graph6, RoundTripIncludingLongHeader) {
    std::vector<Graph> graphs = testing::random_corpus(100, 20, 73);
    graphs.push_back(erdos_renyi(63, Rational(1, 10), 1));
    graphs.push_back(erdos_renyi(200, Rational(1, 50), 2));
    graphs.push_back(inflated_cube());
    for (const Graph& g : graphs)
        EXPECT_EQ(parse_graph6(serialize_graph6(g)), g);
}

TEST(Graph6, MultiLineReportsLineNumber) {
    auto gs = parse_graph6_lines("A_\n\nBw\n");
    ASSERT_EQ(gs.size(), 2u);
    try {
        parse_graph6_lines("A_\nBw\nB\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(EdgeList, ParsesCommentsAndHeader) {
    Graph g = parse_edge_list("# triangle\nn 4\n0 1\n1 2 # inline\n\n2 0\n");
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(g.size(), 3u);
}

TEST(EdgeList, InfersOrderWithoutHeader) {
    EXPECT_EQ(parse_edge_list("0 1\n3 1\n").order(), 4u);
    EXPECT_EQ(parse_edge_list("").order(), 0u);
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
    struct Case {
        const char* text;
        std::size_t line;
    };
    const Case cases[] = {
        {"0 1\n2 2\n", 2},         // self-loop
        {"n 3\n0 1\n1 5\n", 3},    // out of range
        {"0 1 2\n", 1},            // too many fields
        {"n 3\nn 4\n", 2},         // duplicate header
        {"0 x\n", 1},              // not an integer
        {"0 -1\n", 1},             // negative
    };
    for (const auto& c : cases) {
        try {
            parse_edge_list(c.text);
            ADD_FAILURE() << "no error for: " << c.text;
        } catch (const ParseError& e) {
            EXPECT_EQ(e.line(), c.line) << c.text;
            EXPECT_NE(std::string(e.what()).find("line " + std::to_string(c.line)),
                      std::string::npos);
        }
    }
}

TEST(EdgeList, RoundTrip) {
    for (const Graph& g : testing::random_corpus(100, 15, 79))
        EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g);
}

TEST(Formats, NamesAndPaths) {
    EXPECT_EQ(parse_format_name("graph6"), GraphFormat::Graph6);
    EXPECT_EQ(parse_format_name("edges"), GraphFormat::EdgeList);
    EXPECT_FALSE(parse_format_name("xml").has_value());
    EXPECT_EQ(format_from_path("a/b.g6"), GraphFormat::Graph6);
    EXPECT_EQ(format_from_path("x.edges"), GraphFormat::EdgeList);
}

TEST(Formats, Dot) {
    const std::string dot = to_dot(path_graph(3), "P3");
    EXPECT_NE(dot.find("graph P3 {"), std::string::npos);
    EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
    EXPECT_NE(dot.find("1 -- 2;"), std::string::npos);
}

TEST(Formats, ReadGraphFile) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto g6 = dir / "graphdim_formats_test.g6";
    const auto two = dir / "graphdim_formats_test_two.g6";
    std::ofstream(g6) << "Bw\n";
    std::ofstream(two) << "Bw\nA_\n";
    EXPECT_EQ(read_graph_file(g6.string()), complete_graph(3));
    EXPECT_THROW(read_graph_file(two.string()), ParseError);
    EXPECT_THROW(read_graph_file((dir / "graphdim_missing.edges").string()), ParseError);
    std::filesystem::remove(g6);
    std::filesystem::remove(two);
}

} // namespace
} // namespace graphdim
