#include "graphdim/dimension.hpp"

#include "graphdim/cliques.hpp"
#include "graphdim/errors.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

namespace graphdim {

struct DimensionEngine::Cache {
    mutable std::shared_mutex mutex;
    std::unordered_map<VertexSet, Rational, VertexSetHash> table;

    bool find(const VertexSet& key, Rational& out) const {
        std::shared_lock lock(mutex);
        auto it = table.find(key);
        if (it == table.end())
            return false;
        out = it->second;
        return true;
    }

    // insert-if-absent; a racing duplicate computed the same value
    void insert(const VertexSet& key, const Rational& value) {
        std::unique_lock lock(mutex);
        table.try_emplace(key, value);
    }
};

DimensionEngine::DimensionEngine(Graph host, DimOptions options)
    : host_(std::move(host)), options_(options), cache_(std::make_unique<Cache>()) {
    options_.threads = std::max(1U, options_.threads);
}

DimensionEngine::~DimensionEngine() = default;
DimensionEngine::DimensionEngine(DimensionEngine&&) noexcept = default;
DimensionEngine& DimensionEngine::operator=(DimensionEngine&&) noexcept = default;

std::size_t DimensionEngine::cache_size() const {
    std::shared_lock lock(cache_->mutex);
    return cache_->table.size();
}

Rational DimensionEngine::dim() {
    return dim(host_.vertices());
}

Rational DimensionEngine::dim(const VertexSet& subset) {
    if (subset.universe() != host_.order())
        throw InvalidInput("vertex subset does not belong to the host graph");
    if (!options_.memoize)
        return dim_unmemoized(induced_subgraph(host_, subset).graph);
    return dim_top_level(subset);
}

Rational DimensionEngine::vertex_dim(Vertex v) {
    return Rational(1) + dim(host_.neighbors(v));
}

Rational DimensionEngine::dim_subset(const VertexSet& s) {
    if (s.empty())
        return Rational(-1);
    Rational cached;
    if (cache_->find(s, cached))
        return cached;

    Rational sum;
    for (Vertex v : s)
        sum += dim_subset(host_.neighbors(v) & s);
    Rational result = Rational(1) + sum / Rational(static_cast<std::int64_t>(s.size()));
    cache_->insert(s, result);
    return result;
}

Rational DimensionEngine::dim_top_level(const VertexSet& s) {
    const std::size_t n = s.size();
    if (options_.threads <= 1 || n < 2 * options_.threads)
        return dim_subset(s);

    Rational cached;
    if (cache_->find(s, cached))
        return cached;

    const auto members = s.to_vector();
    const unsigned workers = options_.threads;
    std::vector<Rational> partial(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < members.size(); i += workers)
                    partial[t] += dim_subset(host_.neighbors(members[i]) & s);
            });
        }
    }
    Rational sum;
    for (const auto& p : partial)
        sum += p;
    Rational result = Rational(1) + sum / Rational(static_cast<std::int64_t>(n));
    cache_->insert(s, result);
    return result;
}

Rational dim(const Graph& g, const DimOptions& options) {
    if (!options.memoize)
        return dim_unmemoized(g);
    return DimensionEngine(g, options).dim();
}

Rational vertex_dim(const Graph& g, Vertex v, const DimOptions& options) {
    if (!options.memoize)
        return Rational(1) + dim_unmemoized(unit_sphere(g, v));
    return DimensionEngine(g, options).vertex_dim(v);
}

Rational dim_unmemoized(const Graph& g) {
    if (g.empty())
        return Rational(-1);
    Rational sum;
    for (Vertex v = 0; v < g.order(); ++v)
        sum += Rational(1) + dim_unmemoized(unit_sphere(g, v));
    return sum / Rational(static_cast<std::int64_t>(g.order()));
}

DimReport dim_spectrum(const Graph& g, const DimOptions& options) {
    DimReport r;
    if (g.empty()) {
        r.graph_dim = Rational(-1);
        return r;
    }
    if (options.memoize) {
        DimensionEngine engine(g, options);
        r.graph_dim = engine.dim();
        for (Vertex v = 0; v < g.order(); ++v)
            r.vertex_dims.push_back(engine.vertex_dim(v));
    } else {
        r.graph_dim = dim_unmemoized(g);
        for (Vertex v = 0; v < g.order(); ++v)
            r.vertex_dims.push_back(vertex_dim(g, v, options));
    }
    r.is_uniform = std::all_of(r.vertex_dims.begin(), r.vertex_dims.end(),
                               [&](const Rational& d) { return d == r.vertex_dims.front(); });
    const auto stats = clique_stats(g);
    r.omega = stats.omega;
    r.gamma = stats.gamma;
    r.is_pure = stats.pure;
    return r;
}

LawCheck check_disjoint_union_law(std::span<const Graph> components) {
    Graph whole;
    Rational weighted;
    std::size_t total = 0;
    for (const auto& c : components) {
        whole = disjoint_union(whole, c);
        if (!c.empty())
            weighted += Rational(static_cast<std::int64_t>(c.order())) * dim(c);
        total += c.order();
    }
    if (total == 0)
        throw InvalidInput("disjoint union law needs at least one nonempty component");
    return {dim(whole), weighted / Rational(static_cast<std::int64_t>(total))};
}

LawCheck check_join_law(const Graph& g1, const Graph& g2) {
    return {dim(join(g1, g2)), Rational(1) + dim(g1) + dim(g2)};
}

LawCheck check_iterated_join_law(std::span<const Graph> parts) {
    if (parts.empty())
        throw InvalidInput("iterated join law needs at least one part");
    Graph whole = parts.front();
    Rational rhs = dim(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) {
        whole = join(whole, parts[i]);
        rhs += Rational(1) + dim(parts[i]);
    }
    return {dim(whole), rhs};
}

} // namespace graphdim
