#include "graphdim/generators.hpp"

#include "graphdim/cliques.hpp"
#include "graphdim/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace graphdim {

std::uint64_t SeededRng::below(std::uint64_t bound) {
    if (bound == 0)
        throw InvalidInput("SeededRng::below needs a positive bound");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;  // largest multiple of bound, minus one
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return x % bound;
}

bool SeededRng::bernoulli(const Rational& p) {
    if (p.sign() < 0 || p > Rational(1))
        throw InvalidInput("probability " + p.str() + " outside [0, 1]");
    const auto num = p.numerator();
    const auto den = p.denominator();
    if (den > std::numeric_limits<std::uint64_t>::max())
        throw InvalidInput("probability denominator exceeds 64 bits");
    return Rational::Integer(below(den.convert_to<std::uint64_t>())) < num;
}

std::vector<Vertex> SeededRng::permutation(std::size_t n) {
    std::vector<Vertex> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(p[i - 1], p[below(i)]);
    return p;
}

std::vector<Vertex> SeededRng::sample(std::size_t n, std::size_t k) {
    if (k > n)
        throw InvalidInput("cannot sample more elements than available");
    std::vector<Vertex> pool(n);
    for (std::size_t i = 0; i < n; ++i)
        pool[i] = i;
    for (std::size_t i = 0; i < k; ++i)
        std::swap(pool[i], pool[i + below(n - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

namespace {

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& members) {
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            edges.emplace_back(members[a], members[b]);
}

std::vector<Vertex> iota(Vertex from, std::size_t count) {
    std::vector<Vertex> v(count);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = from + i;
    return v;
}

} // namespace

Graph star_clique(std::size_t k, std::size_t n) {
    if (k < 2 || k > n)
        throw InvalidInput("star_clique needs 2 <= k <= n");
    std::vector<Edge> edges;
    add_clique(edges, iota(0, k));
    for (std::size_t j = 0; j < n - k; ++j)
        edges.emplace_back(j % k, k + j);
    return Graph::from_edges(n, edges);
}

Graph inflated_cube() {
    std::vector<Edge> edges;
    for (Vertex b = 0; b < 8; ++b) {
        add_clique(edges, iota(4 * b, 4));
        for (Vertex bit : {1U, 2U, 4U}) {
            Vertex other = b ^ bit;
            if (other > b)
                for (Vertex i = 0; i < 4; ++i)
                    edges.emplace_back(4 * b + i, 4 * other + i);
        }
    }
    return Graph::from_edges(32, edges);
}

Graph double_clique_matching(std::size_t c) {
    if (c < 2)
        throw InvalidInput("double_clique_matching needs c >= 2");
    std::vector<Edge> edges;
    add_clique(edges, iota(0, c));
    add_clique(edges, iota(c, c));
    for (Vertex i = 0; i < c; ++i)
        edges.emplace_back(i, c + i);
    return Graph::from_edges(2 * c, edges);
}

Graph windmill(std::size_t t) {
    if (t < 1)
        throw InvalidInput("windmill needs at least one triangle");
    std::vector<Edge> edges;
    for (Vertex j = 0; j < t; ++j)
        add_clique(edges, {0, 2 * j + 1, 2 * j + 2});
    return Graph::from_edges(2 * t + 1, edges);
}

Graph pure_glued(std::size_t n, std::size_t clique_order, std::uint64_t seed,
                 std::size_t max_rejections) {
    const std::size_t N = clique_order;
    if (N < 2 || n < N)
        throw InvalidInput("pure_glued needs n >= N >= 2");
    SeededRng rng(seed);
    std::vector<std::vector<Vertex>> blocks{iota(0, N)};
    std::vector<Edge> edges;
    add_clique(edges, blocks.front());
    std::size_t order = N;
    std::size_t rejections = 0;

    while (order < n) {
        const std::size_t remaining = n - order;
        const std::size_t lo = std::max<std::size_t>(1, N > remaining ? N - remaining : 1);
        const std::size_t hi = std::min(N - 1, order);
        const std::size_t shared_count = lo + rng.below(hi - lo + 1);

        std::vector<Vertex> block;
        if (rng.below(2) == 0) {
            const auto& host = blocks[rng.below(blocks.size())];
            for (std::size_t i : rng.sample(host.size(), shared_count))
                block.push_back(host[i]);
        } else {
            block = rng.sample(order, shared_count);
        }
        const std::size_t fresh = N - shared_count;
        for (std::size_t i = 0; i < fresh; ++i)
            block.push_back(order + i);

        std::vector<Edge> trial = edges;
        add_clique(trial, block);
        const Graph g = Graph::from_edges(order + fresh, trial);
        const auto stats = clique_stats(g);
        if (stats.pure && stats.omega == N) {
            edges = std::move(trial);
            blocks.push_back(std::move(block));
            order += fresh;
        } else if (++rejections > max_rejections) {
            throw ResourceLimit("pure_glued exhausted its rejection budget of " +
                                std::to_string(max_rejections));
        }
    }
    return Graph::from_edges(n, edges);
}

Graph erdos_renyi(std::size_t n, const Rational& p, std::uint64_t seed) {
    if (p.sign() < 0 || p > Rational(1))
        throw InvalidInput("edge probability " + p.str() + " outside [0, 1]");
    SeededRng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    SeededRng rng(seed);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(rng.below(v), v);
    return Graph::from_edges(n, edges);
}

Graph random_connected(std::size_t n, const Rational& p, std::uint64_t seed,
                       std::size_t max_attempts) {
    SeededRng seeds(seed);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = erdos_renyi(n, p, seeds.next());
        if (is_connected(g))
            return g;
    }
    throw ResourceLimit("random_connected found no connected sample in " +
                        std::to_string(max_attempts) + " attempts");
}

std::map<std::string, std::string> GenSpec::parse_params(const std::string& text) {
    std::map<std::string, std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InvalidInput("parameter '" + item + "' is not of the form key=value");
        out[item.substr(0, eq)] = item.substr(eq + 1);
        pos = comma + 1;
    }
    return out;
}

namespace {

std::size_t param_count(const GenSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw InvalidInput("family " + spec.family + " needs parameter " + key);
    std::size_t value = 0;
    const auto& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InvalidInput("parameter " + key + "=" + s + " is not a count");
    return value;
}

Rational param_rational(const GenSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw InvalidInput("family " + spec.family + " needs parameter " + key);
    return Rational::parse(it->second);
}

} // namespace

std::vector<std::string> generator_families() {
    return {"complete",  "edgeless",      "cycle",   "path",
            "petersen",  "star_clique",   "inflated_cube", "double_clique_matching",
            "windmill",  "pure_glued",    "erdos_renyi",   "tree"};
}

Graph generate(const GenSpec& spec) {
    const auto& f = spec.family;
    if (f == "complete")
        return complete_graph(param_count(spec, "n"));
    if (f == "edgeless")
        return edgeless_graph(param_count(spec, "n"));
    if (f == "cycle")
        return cycle_graph(param_count(spec, "n"));
    if (f == "path")
        return path_graph(param_count(spec, "n"));
    if (f == "petersen")
        return petersen_graph();
    if (f == "star_clique")
        return star_clique(param_count(spec, "k"), param_count(spec, "n"));
    if (f == "inflated_cube")
        return inflated_cube();
    if (f == "double_clique_matching")
        return double_clique_matching(param_count(spec, "c"));
    if (f == "windmill")
        return windmill(param_count(spec, "t"));
    if (f == "pure_glued")
        return pure_glued(param_count(spec, "n"), param_count(spec, "N"), spec.seed);
    if (f == "erdos_renyi")
        return erdos_renyi(param_count(spec, "n"), param_rational(spec, "p"), spec.seed);
    if (f == "tree")
        return random_tree(param_count(spec, "n"), spec.seed);
    throw InvalidInput("unknown graph family '" + f + "'");
}

} // namespace graphdim
