#include "graphdim/formats.hpp"

#include "graphdim/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace graphdim {

std::optional<GraphFormat> parse_format_name(std::string_view name) {
    if (name == "edges" || name == "edge_list" || name == "edgelist")
        return GraphFormat::EdgeList;
    if (name == "graph6" || name == "g6")
        return GraphFormat::Graph6;
    return std::nullopt;
}

GraphFormat format_from_path(std::string_view path) {
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() &&
               path.substr(path.size() - suffix.size()) == suffix;
    };
    return ends_with(".g6") || ends_with(".graph6") ? GraphFormat::Graph6 : GraphFormat::EdgeList;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_id(std::string_view tok, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected a nonnegative integer, got '" + std::string(tok) + "'", line);
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<std::size_t> declared;
    std::vector<Edge> edges;
    std::size_t max_id_plus_one = 0;
    std::size_t line_no = 0;
    std::vector<std::size_t> edge_lines;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto tok = split_ws(line);
        if (tok.empty())
            continue;
        if (tok[0] == "n") {
            if (tok.size() != 2)
                throw ParseError("header must be 'n <count>'", line_no);
            if (declared)
                throw ParseError("duplicate 'n' header", line_no);
            declared = parse_id(tok[1], line_no);
            continue;
        }
        if (tok.size() != 2)
            throw ParseError("expected 'u v', got " + std::to_string(tok.size()) + " fields",
                             line_no);
        const std::size_t u = parse_id(tok[0], line_no);
        const std::size_t v = parse_id(tok[1], line_no);
        if (u == v)
            throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
        edges.emplace_back(u, v);
        edge_lines.push_back(line_no);
        max_id_plus_one = std::max({max_id_plus_one, u + 1, v + 1});
    }

    const std::size_t n = declared.value_or(max_id_plus_one);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].first >= n || edges[i].second >= n)
            throw ParseError("vertex id out of range for declared n = " + std::to_string(n),
                             edge_lines[i]);
    return Graph::from_edges(n, edges);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges())
        os << u << ' ' << v << '\n';
    return os.str();
}

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("empty graph6 record");

    for (char c : text)
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 character code " +
                             std::to_string(static_cast<int>(static_cast<unsigned char>(c))));

    std::size_t pos = 0;
    auto take = [&]() -> std::uint64_t {
        if (pos >= text.size())
            throw ParseError("truncated graph6 record");
        return static_cast<std::uint64_t>(text[pos++] - 63);
    };

    std::uint64_t n = take();
    if (n == 63) {
        std::size_t width = 3;
        if (pos < text.size() && text[pos] == 126) {
            ++pos;
            width = 6;
        }
        n = 0;
        for (std::size_t i = 0; i < width; ++i)
            n = (n << 6) | take();
    }

    const std::uint64_t bits = n * (n - (n > 0)) / 2;
    const std::uint64_t chars = (bits + 5) / 6;
    if (text.size() - pos != chars)
        throw ParseError(text.size() - pos < chars ? "truncated graph6 bit stream"
                                                   : "trailing data after graph6 bit stream");

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const auto word = static_cast<std::uint64_t>(text[pos + k / 6] - 63);
            if ((word >> (5 - k % 6)) & 1U)
                edges.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    for (; k < chars * 6; ++k) {
        const auto word = static_cast<std::uint64_t>(text[pos + k / 6] - 63);
        if ((word >> (5 - k % 6)) & 1U)
            throw ParseError("nonzero padding bits in graph6 record");
    }
    return Graph::from_edges(n, edges);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t pos = 0, line_no = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        while (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    return out;
}

std::string serialize_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.append(2, static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    unsigned acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::Graph6 ? serialize_graph6(g) + "\n" : serialize_edge_list(g);
}

std::string to_dot(const Graph& g, std::string_view name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v)
        os << "  " << v << ";\n";
    for (auto [u, v] : g.edges())
        os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph read_graph_file(const std::string& path, std::optional<GraphFormat> format) {
    const std::string text = read_text_file(path);
    if (format.value_or(format_from_path(path)) == GraphFormat::EdgeList)
        return parse_edge_list(text);
    auto graphs = parse_graph6_lines(text);
    if (graphs.size() != 1)
        throw ParseError("expected exactly one graph6 record in '" + path + "', found " +
                         std::to_string(graphs.size()));
    return std::move(graphs.front());
}

} // namespace graphdim
