#include "graphdim/ecc.hpp"

#include "graphdim/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace graphdim {

namespace {

// Bitsets over edge indices reuse the vertex bitset.
using EdgeSet = VertexSet;

struct SetCoverInstance {
    std::vector<VertexSet> candidates;      // maximal cliques of order >= 2
    std::vector<EdgeSet> covers;            // edge set of each candidate
    std::vector<std::vector<std::size_t>> by_edge;  // candidates containing each edge
    std::size_t edge_count = 0;
};

SetCoverInstance build_instance(const Graph& g, const CliqueOptions& clique_opts) {
    SetCoverInstance inst;
    const auto edges = g.edges();
    inst.edge_count = edges.size();

    std::vector<std::vector<std::size_t>> edge_id(g.order(), std::vector<std::size_t>(g.order()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        edge_id[edges[i].first][edges[i].second] = i;
        edge_id[edges[i].second][edges[i].first] = i;
    }

    for (auto& c : maximal_cliques(g, clique_opts)) {
        if (c.size() < 2)
            continue;
        EdgeSet es(inst.edge_count);
        auto members = c.to_vector();
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                es.insert(edge_id[members[a]][members[b]]);
        inst.candidates.push_back(std::move(c));
        inst.covers.push_back(std::move(es));
    }

    inst.by_edge.resize(inst.edge_count);
    for (std::size_t c = 0; c < inst.covers.size(); ++c)
        for (std::size_t e : inst.covers[c])
            inst.by_edge[e].push_back(c);
    return inst;
}

class BranchAndBound {
public:
    BranchAndBound(const SetCoverInstance& inst, std::uint64_t budget)
        : inst_(inst), budget_(budget) {}

    std::vector<std::size_t> solve() {
        best_ = greedy();
        std::vector<std::size_t> chosen;
        search(EdgeSet::full(inst_.edge_count), chosen);
        return best_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    // Most-uncovered-edges-first; lowest index on ties.
    std::vector<std::size_t> greedy() const {
        std::vector<std::size_t> picked;
        EdgeSet uncovered = EdgeSet::full(inst_.edge_count);
        while (!uncovered.empty()) {
            std::size_t best = 0, gain = 0;
            for (std::size_t c = 0; c < inst_.covers.size(); ++c) {
                std::size_t k = inst_.covers[c].intersection_size(uncovered);
                if (k > gain) {
                    gain = k;
                    best = c;
                }
            }
            picked.push_back(best);
            uncovered -= inst_.covers[best];
        }
        return picked;
    }

    void search(const EdgeSet& uncovered, std::vector<std::size_t>& chosen) {
        if (++nodes_ > budget_)
            throw ResourceLimit("edge clique cover search exceeded " + std::to_string(budget_) +
                                " branch nodes");
        if (uncovered.empty()) {
            if (chosen.size() < best_.size())
                best_ = chosen;
            return;
        }
        if (chosen.size() + 1 >= best_.size())
            return;

        const std::size_t remaining = uncovered.size();
        std::size_t widest = 0;
        for (const auto& es : inst_.covers)
            widest = std::max(widest, es.intersection_size(uncovered));
        const std::size_t lower = chosen.size() + (remaining + widest - 1) / widest;
        if (lower >= best_.size())
            return;

        // branch on the uncovered edge with the fewest candidate cliques
        std::size_t edge = inst_.edge_count;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (std::size_t e : uncovered) {
            if (inst_.by_edge[e].size() < fewest) {
                fewest = inst_.by_edge[e].size();
                edge = e;
            }
        }

        std::vector<std::pair<std::size_t, std::size_t>> order;  // (gain, candidate)
        for (std::size_t c : inst_.by_edge[edge])
            order.emplace_back(inst_.covers[c].intersection_size(uncovered), c);
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });

        for (auto [gain, c] : order) {
            chosen.push_back(c);
            search(uncovered - inst_.covers[c], chosen);
            chosen.pop_back();
            if (chosen.size() + 1 >= best_.size())
                return;
        }
    }

    const SetCoverInstance& inst_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> best_;
};

std::vector<VertexSet> sorted_members(const SetCoverInstance& inst,
                                      const std::vector<std::size_t>& picks) {
    std::vector<VertexSet> out;
    out.reserve(picks.size());
    for (std::size_t c : picks)
        out.push_back(inst.candidates[c]);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// Calls visit(indices) for each k-subset of candidates covering every edge;
// stops early when visit returns false.
template <typename Visit>
void for_each_cover_of_size(const SetCoverInstance& inst, std::size_t k, Visit&& visit) {
    const std::size_t m = inst.covers.size();
    if (k > m)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        EdgeSet covered(inst.edge_count);
        for (std::size_t i : idx)
            covered |= inst.covers[i];
        if (covered.size() == inst.edge_count && !visit(idx))
            return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

SetCoverInstance exhaustive_instance(const Graph& g, std::size_t max_candidates) {
    auto inst = build_instance(g, {});
    if (inst.candidates.size() > max_candidates)
        throw ResourceLimit("exhaustive cover search limited to " + std::to_string(max_candidates) +
                            " maximal cliques, graph has " +
                            std::to_string(inst.candidates.size()));
    return inst;
}

} // namespace

CliqueCover min_edge_clique_cover(const Graph& g, const EccOptions& options) {
    CliqueCover cover;
    if (g.size() == 0) {
        cover.edgeless = true;
        return cover;
    }
    const auto inst = build_instance(g, options.cliques);
    BranchAndBound solver(inst, options.node_budget);
    cover.cliques = sorted_members(inst, solver.solve());
    cover.nodes = solver.nodes();
    return cover;
}

std::size_t ecc_number(const Graph& g, const EccOptions& options) {
    return min_edge_clique_cover(g, options).size();
}

CoverCheck verify_cover(const Graph& g, const std::vector<VertexSet>& cover) {
    CoverCheck check;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        if (cover[i].universe() != g.order())
            throw InvalidInput("cover member " + std::to_string(i) +
                               " is not a vertex set of this graph");
        if (!g.is_clique(cover[i]))
            check.non_cliques.push_back(i);
    }
    for (auto [u, v] : g.edges()) {
        bool hit = std::any_of(cover.begin(), cover.end(), [&](const VertexSet& c) {
            return c.contains(u) && c.contains(v);
        });
        if (!hit)
            check.uncovered.emplace_back(u, v);
    }
    check.valid = check.uncovered.empty() && check.non_cliques.empty();
    return check;
}

std::size_t ecc_number_exhaustive(const Graph& g, std::size_t max_candidates) {
    if (g.size() == 0)
        return 0;
    const auto inst = exhaustive_instance(g, max_candidates);
    for (std::size_t k = 1; k <= inst.candidates.size(); ++k) {
        bool found = false;
        for_each_cover_of_size(inst, k, [&](const auto&) {
            found = true;
            return false;
        });
        if (found)
            return k;
    }
    throw std::logic_error("maximal cliques always cover every edge");
}

std::vector<std::vector<VertexSet>> all_minimum_covers_exhaustive(const Graph& g,
                                                                  std::size_t max_candidates) {
    if (g.size() == 0)
        return {{}};
    const auto inst = exhaustive_instance(g, max_candidates);
    std::vector<std::vector<VertexSet>> out;
    for (std::size_t k = 1; k <= inst.candidates.size() && out.empty(); ++k) {
        for_each_cover_of_size(inst, k, [&](const std::vector<std::size_t>& idx) {
            out.push_back(sorted_members(inst, idx));
            return true;
        });
    }
    return out;
}

} // namespace graphdim
