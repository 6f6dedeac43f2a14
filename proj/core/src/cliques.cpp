#include "graphdim/cliques.hpp"

#include "graphdim/errors.hpp"

#include <algorithm>
#include <string>

namespace graphdim {

namespace {

class BronKerbosch {
public:
    BronKerbosch(const Graph& g, const CliqueOptions& opts) : g_(g), opts_(opts) {}

    std::vector<VertexSet> run() {
        const std::size_t n = g_.order();
        expand(VertexSet(n), VertexSet::full(n), VertexSet(n));
        return std::move(out_);
    }

private:
    // Pivot: vertex of P u X with the most neighbors in P; lowest id wins ties.
    Vertex pivot(const VertexSet& p, const VertexSet& x) const {
        Vertex best = g_.order();
        std::size_t best_overlap = 0;
        for (const VertexSet* s : {&p, &x}) {
            for (Vertex u : *s) {
                std::size_t k = g_.neighbors(u).intersection_size(p);
                if (best == g_.order() || k > best_overlap || (k == best_overlap && u < best)) {
                    best = u;
                    best_overlap = k;
                }
            }
        }
        return best;
    }

    void expand(VertexSet r, VertexSet p, VertexSet x) {
        if (p.empty()) {
            if (x.empty()) {
                if (out_.size() >= opts_.max_cliques)
                    throw ResourceLimit("maximal clique enumeration exceeded " +
                                        std::to_string(opts_.max_cliques) + " cliques");
                out_.push_back(r);
            }
            return;
        }
        VertexSet branch = p - g_.neighbors(pivot(p, x));
        for (Vertex v : branch) {
            const VertexSet& nb = g_.neighbors(v);
            VertexSet r2 = r;
            r2.insert(v);
            expand(std::move(r2), p & nb, x & nb);
            p.erase(v);
            x.insert(v);
        }
    }

    const Graph& g_;
    const CliqueOptions& opts_;
    std::vector<VertexSet> out_;
};

void require_nonempty(const Graph& g, const char* what) {
    if (g.empty())
        throw InvalidInput(std::string(what) + " is undefined for the empty graph");
}

} // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g, const CliqueOptions& options) {
    if (g.empty())
        return {};
    auto cliques = BronKerbosch(g, options).run();
    std::sort(cliques.begin(), cliques.end(), lex_less);
    return cliques;
}

CliqueStats clique_stats(const std::vector<VertexSet>& cliques) {
    if (cliques.empty())
        throw InvalidInput("clique statistics need at least one clique");
    CliqueStats s;
    s.gamma = cliques.front().size();
    for (const auto& c : cliques) {
        s.omega = std::max(s.omega, c.size());
        s.gamma = std::min(s.gamma, c.size());
    }
    s.pure = s.omega == s.gamma;
    return s;
}

CliqueStats clique_stats(const Graph& g) {
    require_nonempty(g, "clique statistics");
    return clique_stats(maximal_cliques(g));
}

std::size_t clique_number(const Graph& g) {
    require_nonempty(g, "clique number");
    return clique_stats(g).omega;
}

std::size_t min_clique_number(const Graph& g) {
    require_nonempty(g, "minimum clique number");
    return clique_stats(g).gamma;
}

bool is_pure(const Graph& g) {
    require_nonempty(g, "purity");
    return clique_stats(g).pure;
}

} // namespace graphdim
