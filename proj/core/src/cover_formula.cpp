#include "graphdim/cover_formula.hpp"

#include "graphdim/cliques.hpp"
#include "graphdim/errors.hpp"

#include <bit>
#include <cstdint>

namespace graphdim {

namespace {

Rational from_size(std::size_t n) {
    return Rational(static_cast<std::int64_t>(n));
}

void check_members(const Graph& g, const std::vector<VertexSet>& cover) {
    for (const auto& c : cover)
        if (c.universe() != g.order())
            throw InvalidInput("cover member is not a vertex set of this graph");
}

} // namespace

SignatureCounts signature_counts(const Graph& g, const std::vector<VertexSet>& cover) {
    check_members(g, cover);
    SignatureCounts out;
    for (Vertex v = 0; v < g.order(); ++v) {
        Signature sig;
        for (std::size_t i = 0; i < cover.size(); ++i)
            if (cover[i].contains(v))
                sig.push_back(i);
        if (sig.empty())
            throw InvalidInput("vertex " + std::to_string(v) + " lies in no cover clique");
        ++out.counts[sig];
        ++out.total;
    }
    return out;
}

SignatureCounts signature_counts_inclusion_exclusion(const Graph& g,
                                                     const std::vector<VertexSet>& cover) {
    check_members(g, cover);
    const std::size_t m = cover.size();
    if (m > 16)
        throw ResourceLimit("inclusion-exclusion cross-check limited to 16 cover cliques");
    const std::size_t subsets = std::size_t{1} << m;

    // f[U] = |intersection of the cliques in U|, then Moebius inversion over supersets
    std::vector<std::int64_t> f(subsets, 0);
    std::vector<VertexSet> inter(subsets);
    inter[0] = g.vertices();
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
        inter[mask] = inter[mask & (mask - 1)] & cover[low];
        f[mask] = static_cast<std::int64_t>(inter[mask].size());
    }
    for (std::size_t bit = 0; bit < m; ++bit)
        for (std::size_t mask = 1; mask < subsets; ++mask)
            if (!(mask & (std::size_t{1} << bit)))
                f[mask] -= f[mask | (std::size_t{1} << bit)];

    SignatureCounts out;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        if (f[mask] == 0)
            continue;
        Signature sig;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t{1} << i))
                sig.push_back(i);
        out.counts[sig] = static_cast<std::size_t>(f[mask]);
        out.total += static_cast<std::size_t>(f[mask]);
    }
    return out;
}

std::vector<VertexSet> vertex_complete_min_cover(const Graph& g, const EccOptions& options) {
    auto cover = min_edge_clique_cover(g, options).cliques;
    for (Vertex v : isolated_vertices(g))
        cover.emplace_back(g.order(), std::initializer_list<Vertex>{v});
    std::sort(cover.begin(), cover.end(), lex_less);
    return cover;
}

CoverIdentity evaluate_cover_identity(const Graph& g, const std::vector<VertexSet>& cover,
                                      DimensionEngine* engine) {
    if (cover.empty())
        throw InvalidInput("cover identity needs a nonempty cover");
    std::optional<DimensionEngine> own;
    if (!engine)
        engine = &own.emplace(g);
    else if (engine->host().order() != g.order())
        throw InvalidInput("dimension engine is bound to a different graph");

    const auto counts = signature_counts(g, cover);
    const std::size_t m = cover.size();

    VertexSet common = g.vertices();
    for (const auto& c : cover)
        common &= c;

    CoverIdentity out;
    out.cover_size = m;
    out.common_order = common.size();
    out.lhs = from_size(g.order() - common.size()) * engine->dim();
    for (const auto& [sig, count] : counts.counts) {
        if (sig.size() == m)
            continue;  // K_L itself
        VertexSet u(g.order());
        for (std::size_t i : sig)
            u |= cover[i];
        out.rhs += from_size(count) * engine->dim(u);
    }
    return out;
}

Rational dim_via_cover(const Graph& g, const std::vector<VertexSet>& cover,
                       DimensionEngine* engine) {
    if (cover.size() == 1) {
        signature_counts(g, cover);  // every vertex must be covered
        return from_size(cover.front().size()) - Rational(1);
    }
    const auto id = evaluate_cover_identity(g, cover, engine);
    const std::size_t denom = g.order() - id.common_order;
    if (denom == 0)
        throw InvalidInput("malformed cover: every vertex lies in every clique of a cover of " +
                           std::to_string(cover.size()) + " cliques");
    return id.rhs / from_size(denom);
}

LawCheck check_two_clique_lemma(const Graph& g) {
    const auto cover = min_edge_clique_cover(g).cliques;
    if (cover.size() != 2)
        throw InvalidInput("two-clique lemma needs clique cover number 2, got " +
                           std::to_string(cover.size()));
    const VertexSet& v1 = cover[0];
    const VertexSet& v2 = cover[1];
    if (!isolated_vertices(g).empty())
        throw InvalidInput("two-clique lemma needs every vertex in one of the two cliques");

    const std::size_t shared = v1.intersection_size(v2);
    const Rational dim_k1 = from_size(v1.size()) - Rational(1);
    const Rational dim_k2 = from_size(v2.size()) - Rational(1);
    return {from_size(g.order() - shared) * dim(g),
            from_size(v1.size() - shared) * dim_k1 + from_size(v2.size() - shared) * dim_k2};
}

PureCheck check_pure_corollary(const Graph& g) {
    const auto stats = clique_stats(g);
    if (!stats.pure)
        throw InvalidInput("graph is not pure: maximal cliques of orders " +
                           std::to_string(stats.gamma) + " to " + std::to_string(stats.omega));
    DimensionEngine engine(g);
    PureCheck out;
    out.dim = engine.dim();
    out.expected = from_size(stats.omega) - Rational(1);
    out.vertex_dims_ok = true;
    for (Vertex v = 0; v < g.order(); ++v)
        out.vertex_dims_ok = out.vertex_dims_ok && engine.vertex_dim(v) == out.expected;
    return out;
}

Rational connected_lower_bound(std::size_t k, std::size_t n) {
    const Rational kk = from_size(k), nn = from_size(n);
    const Rational denom = nn * (kk * (kk - Rational(2)) + nn);
    if (denom.is_zero())
        throw InvalidInput("connected lower bound undefined for k = " + std::to_string(k) +
                           ", n = " + std::to_string(n));
    return Rational(1) + kk * kk * (kk - Rational(1)) * (kk - Rational(2)) / denom;
}

BoundsReport bounds_report(const Graph& g) {
    if (g.empty())
        throw InvalidInput("bounds are undefined for the empty graph");
    return bounds_report(g, dim(g));
}

BoundsReport bounds_report(const Graph& g, const Rational& known_dim) {
    if (g.empty())
        throw InvalidInput("bounds are undefined for the empty graph");
    const auto stats = clique_stats(g);
    const std::size_t k = stats.omega;
    BoundsReport r;
    r.omega = k;
    r.gamma = stats.gamma;
    r.connected = is_connected(g);
    r.dim = known_dim;
    r.lower_basic = from_size(k * (k - 1)) / from_size(g.order());
    r.upper = from_size(k) - Rational(1);
    r.lower_gamma = from_size(stats.gamma) - Rational(1);
    if (r.connected && k >= 2)
        r.lower_connected = connected_lower_bound(k, g.order());
    r.saturated_lower = r.dim == r.lower_basic;
    r.saturated_lower_connected = r.lower_connected && r.dim == *r.lower_connected;
    r.saturated_upper = r.dim == r.upper;
    return r;
}

std::vector<std::string> BoundsReport::violations() const {
    std::vector<std::string> out;
    if (dim < lower_basic)
        out.push_back("dim " + dim.str() + " < k(k-1)/|G| = " + lower_basic.str());
    if (dim > upper)
        out.push_back("dim " + dim.str() + " > k-1 = " + upper.str());
    if (lower_connected && dim < *lower_connected)
        out.push_back("dim " + dim.str() + " < connected lower bound " + lower_connected->str());
    if (connected && dim < lower_gamma)
        out.push_back("dim " + dim.str() + " < gamma-1 = " + lower_gamma.str());
    return out;
}

} // namespace graphdim
