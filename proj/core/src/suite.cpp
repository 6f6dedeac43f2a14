#include "graphdim/suite.hpp"

#include "graphdim/cliques.hpp"
#include "graphdim/cover_formula.hpp"
#include "graphdim/dimension.hpp"
#include "graphdim/ecc.hpp"
#include "graphdim/formats.hpp"
#include "graphdim/generators.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

namespace graphdim {

bool SuiteResult::all_passed() const {
    return std::all_of(criteria.begin(), criteria.end(),
                       [](const CriterionResult& c) { return c.passed; });
}

namespace {

constexpr std::size_t kMaxReportedFailures = 5;

class Tally {
public:
    void check(bool ok, const std::function<std::string()>& describe) {
        ++checks_;
        if (ok)
            return;
        if (failures_++ < kMaxReportedFailures)
            messages_.push_back(describe());
    }

    void require_at_least(std::size_t have, std::size_t need, const std::string& what) {
        check(have >= need, [&] {
            return what + ": " + std::to_string(have) + " instances, need " + std::to_string(need);
        });
    }

    void note(std::string s) { notes_.push_back(std::move(s)); }

    CriterionResult finish(int id, std::string title) const {
        CriterionResult r;
        r.id = id;
        r.title = std::move(title);
        r.passed = failures_ == 0;
        r.checks = checks_;
        std::ostringstream os;
        for (const auto& n : notes_)
            os << n << "; ";
        if (failures_)
            os << failures_ << " failure(s): ";
        for (std::size_t i = 0; i < messages_.size(); ++i)
            os << (i ? " | " : "") << messages_[i];
        r.detail = os.str();
        while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';'))
            r.detail.pop_back();
        return r;
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::vector<std::string> messages_;
    std::vector<std::string> notes_;
};

std::string describe(const Graph& g) {
    return serialize_graph6(g);
}

const std::array<Rational, 5>& densities() {
    static const std::array<Rational, 5> p{Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                           Rational(2, 3), Rational(3, 4)};
    return p;
}

// Random graph of order n: a tree, a cycle-plus-chords, or G(n, p).
Graph random_graph(SeededRng& rng, std::size_t n) {
    if (n == 0)
        return Graph();
    switch (rng.below(4)) {
    case 0:
        return random_tree(n, rng.next());
    case 1:
        return edgeless_graph(n);
    default:
        return erdos_renyi(n, densities()[rng.below(densities().size())], rng.next());
    }
}

// ----- corpora shared by criteria 1-4 -----

struct BaseCorpus {
    std::vector<Graph> graphs;
};

std::vector<Graph> random_trees(std::uint64_t seed) {
    SeededRng rng(seed ^ 0x7ee5ULL);
    std::vector<Graph> trees;
    for (int i = 0; i < 50; ++i)
        trees.push_back(random_tree(2 + rng.below(19), rng.next()));
    return trees;
}

struct JoinCorpus {
    std::vector<std::pair<Graph, Graph>> pairs;
    std::vector<std::array<Graph, 3>> triples;
};

JoinCorpus join_corpus(std::uint64_t seed) {
    SeededRng rng(seed ^ 0x101eULL);
    JoinCorpus c;
    for (int i = 0; i < 200; ++i) {
        const std::size_t total = 2 + rng.below(13);  // 2..14
        const std::size_t n1 = rng.below(total + 1);
        c.pairs.emplace_back(random_graph(rng, n1), random_graph(rng, total - n1));
    }
    for (int i = 0; i < 50; ++i) {
        const std::size_t total = 3 + rng.below(11);  // 3..13
        const std::size_t a = rng.below(total + 1);
        const std::size_t b = rng.below(total - a + 1);
        c.triples.push_back({random_graph(rng, a), random_graph(rng, b),
                             random_graph(rng, total - a - b)});
    }
    return c;
}

std::vector<std::vector<Graph>> union_corpus(std::uint64_t seed) {
    SeededRng rng(seed ^ 0x0b10cULL);
    std::vector<std::vector<Graph>> out;
    for (int i = 0; i < 200; ++i) {
        const std::size_t parts = 2 + rng.below(3);
        std::size_t budget = parts + rng.below(17 - parts);  // total order parts..16
        std::vector<Graph> comps;
        for (std::size_t p = 0; p < parts; ++p) {
            const std::size_t left = parts - p - 1;
            const std::size_t n = p + 1 == parts ? budget : 1 + rng.below(budget - left);
            budget -= n;
            comps.push_back(random_graph(rng, n));
        }
        out.push_back(std::move(comps));
    }
    return out;
}

// ----- connected corpus shared by criteria 5, 8, 9 -----

std::vector<Graph> connected_corpus(const SuiteOptions& opts, std::string* note) {
    std::vector<Graph> out;
    std::size_t from_file = 0;
    if (opts.corpus_path) {
        for (auto& g : parse_graph6_lines(read_text_file(*opts.corpus_path))) {
            if (g.order() >= 2 && g.order() <= 7 && is_connected(g)) {
                out.push_back(std::move(g));
                ++from_file;
            }
        }
    }
    SeededRng rng(opts.seed ^ 0xc0ecULL);
    const std::size_t max_n = std::max<std::size_t>(2, opts.max_n);
    for (std::size_t i = 0; i < opts.samples; ++i) {
        const std::size_t n = 2 + rng.below(max_n - 1);
        const auto& p = densities()[rng.below(densities().size())];
        out.push_back(random_connected(n, p, rng.next()));
    }
    if (note)
        *note = std::to_string(from_file) + " exhaustive + " + std::to_string(opts.samples) +
                " random connected graphs";
    return out;
}

// ----- criteria -----

CriterionResult criterion_base_values(const SuiteOptions& opts) {
    Tally t;
    auto expect = [&](const Graph& g, const Rational& want, const std::string& name) {
        const Rational got = dim(g);
        t.check(got == want, [&] { return name + ": dim " + got.str() + " != " + want.str(); });
    };
    expect(Graph(), Rational(-1), "empty");
    for (std::size_t n = 1; n <= 10; ++n)
        expect(edgeless_graph(n), Rational(0), "edgeless_" + std::to_string(n));
    for (std::size_t n = 1; n <= 8; ++n)
        expect(complete_graph(n), Rational(static_cast<std::int64_t>(n) - 1),
               "K_" + std::to_string(n));
    for (std::size_t n = 4; n <= 12; ++n)
        expect(cycle_graph(n), Rational(1), "C_" + std::to_string(n));
    expect(cycle_graph(3), Rational(2), "C_3");
    for (const auto& tree : random_trees(opts.seed))
        expect(tree, Rational(1), "tree " + describe(tree));
    return t.finish(1, "base values (empty, edgeless, K_N, C_n, trees)");
}

CriterionResult criterion_join(const SuiteOptions& opts) {
    Tally t;
    const auto corpus = join_corpus(opts.seed);
    for (const auto& [a, b] : corpus.pairs) {
        const auto law = check_join_law(a, b);
        t.check(law.holds(), [&] {
            return "join " + describe(a) + " + " + describe(b) + ": " + law.lhs.str() +
                   " != " + law.rhs.str();
        });
    }
    for (const auto& parts : corpus.triples) {
        const auto law = check_iterated_join_law(parts);
        t.check(law.holds(), [&] {
            return "triple join " + describe(parts[0]) + "," + describe(parts[1]) + "," +
                   describe(parts[2]) + ": " + law.lhs.str() + " != " + law.rhs.str();
        });
    }
    t.require_at_least(corpus.pairs.size(), 200, "join pairs");
    t.require_at_least(corpus.triples.size(), 50, "join triples");
    return t.finish(2, "join law and iterated join law");
}

CriterionResult criterion_union(const SuiteOptions& opts) {
    Tally t;
    const auto corpus = union_corpus(opts.seed);
    for (const auto& comps : corpus) {
        const auto law = check_disjoint_union_law(comps);
        t.check(law.holds(), [&] {
            return "union of " + std::to_string(comps.size()) + " parts: " + law.lhs.str() +
                   " != " + law.rhs.str();
        });
    }
    t.require_at_least(corpus.size(), 200, "multi-component graphs");
    return t.finish(3, "disjoint-union weighted average law");
}

CriterionResult criterion_ball_sphere(const SuiteOptions& opts) {
    Tally t;
    std::vector<Graph> corpus{Graph()};
    for (std::size_t n = 1; n <= 10; ++n)
        corpus.push_back(edgeless_graph(n));
    for (std::size_t n = 1; n <= 8; ++n)
        corpus.push_back(complete_graph(n));
    for (std::size_t n = 3; n <= 12; ++n)
        corpus.push_back(cycle_graph(n));
    for (auto& tree : random_trees(opts.seed))
        corpus.push_back(std::move(tree));
    auto jc = join_corpus(opts.seed);
    for (auto& [a, b] : jc.pairs) {
        corpus.push_back(join(a, b));
        corpus.push_back(std::move(a));
        corpus.push_back(std::move(b));
    }
    for (auto& parts : jc.triples) {
        corpus.push_back(join(join(parts[0], parts[1]), parts[2]));
        for (auto& p : parts)
            corpus.push_back(std::move(p));
    }
    for (auto& comps : union_corpus(opts.seed)) {
        Graph whole;
        for (const auto& c : comps)
            whole = disjoint_union(whole, c);
        corpus.push_back(std::move(whole));
    }

    std::size_t vertices = 0;
    for (const auto& g : corpus) {
        DimensionEngine engine(g);
        for (Vertex v = 0; v < g.order(); ++v, ++vertices) {
            const Rational via_sphere = engine.vertex_dim(v);
            const Rational via_ball = dim(unit_ball(g, v));
            t.check(via_sphere == via_ball, [&] {
                return describe(g) + " v" + std::to_string(v) + ": " + via_sphere.str() +
                       " != ball " + via_ball.str();
            });
        }
    }
    t.note(std::to_string(corpus.size()) + " graphs, " + std::to_string(vertices) + " vertices");
    return t.finish(4, "vertex dimension equals unit-ball dimension");
}

CriterionResult criterion_cover_identity(const SuiteOptions& opts) {
    Tally t;
    std::string note;
    const auto corpus = connected_corpus(opts, &note);
    t.note(note);
    std::size_t eligible = 0;
    for (const auto& g : corpus) {
        if (g.order() < 2 || !isolated_vertices(g).empty())
            continue;
        ++eligible;
        const auto cover = vertex_complete_min_cover(g);
        DimensionEngine engine(g);
        const auto id = evaluate_cover_identity(g, cover, &engine);
        t.check(id.holds(), [&] {
            return describe(g) + ": (|G|-|K_L|) dim G = " + id.lhs.str() + ", cover sum " +
                   id.rhs.str();
        });
        if (cover.size() <= 16) {
            const auto direct = signature_counts(g, cover);
            const auto alt = signature_counts_inclusion_exclusion(g, cover);
            t.check(direct.counts == alt.counts && direct.total == g.order(), [&] {
                return describe(g) + ": signature counts disagree with inclusion-exclusion";
            });
        }
    }
    t.require_at_least(eligible, 500, "connected graphs");
    return t.finish(5, "dimension from the minimum edge clique cover");
}

CriterionResult criterion_pure(const SuiteOptions& opts) {
    Tally t;
    SeededRng rng(opts.seed ^ 0x9e7eULL);
    std::size_t generated = 0;
    for (int i = 0; i < 120; ++i) {
        const std::size_t N = 2 + static_cast<std::size_t>(i % 3);
        const std::size_t n = N + rng.below(15 - N);
        const Graph g = pure_glued(n, N, rng.next());
        ++generated;
        const auto check = check_pure_corollary(g);
        t.check(check.holds() && check.expected == Rational(static_cast<std::int64_t>(N) - 1),
                [&] {
                    return "pure_glued(" + std::to_string(n) + "," + std::to_string(N) +
                           ") " + describe(g) + ": dim " + check.dim.str();
                });
    }
    for (std::size_t tcount = 1; tcount <= 5; ++tcount) {
        const auto check = check_pure_corollary(windmill(tcount));
        t.check(check.holds() && check.dim == Rational(2), [&] {
            return "windmill(" + std::to_string(tcount) + "): dim " + check.dim.str();
        });
    }
    t.require_at_least(generated, 100, "pure graphs");
    return t.finish(6, "pure graphs have dimension N-1 at every vertex");
}

CriterionResult criterion_constructions(const SuiteOptions&) {
    Tally t;
    auto uniform_at = [&](const std::string& name, const Graph& g, const Rational& want) {
        const auto rep = dim_spectrum(g);
        for (std::size_t v = 0; v < rep.vertex_dims.size(); ++v)
            t.check(rep.vertex_dims[v] == want, [&] {
                return name + " v" + std::to_string(v) + ": " + rep.vertex_dims[v].str();
            });
        t.check(rep.graph_dim == want, [&] { return name + ": dim " + rep.graph_dim.str(); });
        t.check(rep.is_uniform, [&] { return name + ": not uniform"; });
        t.check(!rep.is_pure, [&] { return name + ": unexpectedly pure"; });
        return rep;
    };
    uniform_at("double_clique_matching(4)", double_clique_matching(4), Rational(5, 2));
    const auto cube = uniform_at("inflated_cube", inflated_cube(), Rational(2));
    t.check(cube.omega == 4 && cube.gamma == 2, [&] {
        return "inflated_cube: omega " + std::to_string(cube.omega) + ", gamma " +
               std::to_string(cube.gamma);
    });
    return t.finish(7, "uniform impure constructions (5/2 and 2)");
}

CriterionResult criterion_bounds(const SuiteOptions& opts) {
    Tally t;
    std::string note;
    const auto corpus = connected_corpus(opts, &note);
    t.note(note);
    for (const auto& g : corpus) {
        const auto rep = bounds_report(g);
        const auto v = rep.violations();
        t.check(v.empty(), [&] { return describe(g) + ": " + v.front(); });
        t.check(rep.lower_connected.has_value() || rep.omega < 2,
                [&] { return describe(g) + ": connected bound missing"; });
    }

    std::vector<Graph> witness{complete_graph(4)};
    witness.push_back(disjoint_union(complete_graph(4), edgeless_graph(4)));
    const auto basic = bounds_report(witness.back());
    t.check(basic.saturated_lower && basic.dim == Rational(3, 2), [&] {
        return "K_4 + 4K_1: dim " + basic.dim.str() + ", bound " + basic.lower_basic.str();
    });

    const auto star = bounds_report(star_clique(4, 12));
    t.check(star.lower_connected && *star.lower_connected == Rational(7, 5) &&
                star.dim == Rational(7, 5) && star.saturated_lower_connected,
            [&] {
                return "star_clique(4,12): dim " + star.dim.str() + ", bound " +
                       (star.lower_connected ? star.lower_connected->str() : "absent");
            });

    for (std::size_t n = 1; n <= 8; ++n) {
        const auto rep = bounds_report(complete_graph(n));
        t.check(rep.saturated_upper, [&] { return "K_" + std::to_string(n) + " misses upper bound"; });
    }
    return t.finish(8, "clique-number bounds and their saturating graphs");
}

CriterionResult criterion_ecc(const SuiteOptions& opts) {
    Tally t;
    std::string note;
    const auto corpus = connected_corpus(opts, &note);
    t.note(note);
    std::size_t instances = 0;
    for (const auto& g : corpus) {
        if (g.order() > 7)
            continue;
        ++instances;
        const auto cover = min_edge_clique_cover(g);
        const std::size_t brute = ecc_number_exhaustive(g);
        t.check(cover.size() == brute, [&] {
            return describe(g) + ": solver " + std::to_string(cover.size()) + ", exhaustive " +
                   std::to_string(brute);
        });
        t.check(verify_cover(g, cover.cliques).valid,
                [&] { return describe(g) + ": returned cover is invalid"; });
    }
    t.require_at_least(instances, 300, "graphs with n <= 7");
    for (std::size_t n = 4; n <= 12; ++n) {
        const std::size_t got = ecc_number(cycle_graph(n));
        t.check(got == n, [&] { return "C_" + std::to_string(n) + ": " + std::to_string(got); });
    }
    const std::size_t pet = ecc_number(petersen_graph());
    t.check(pet == 15, [&] { return "Petersen: " + std::to_string(pet); });
    return t.finish(9, "minimum edge clique cover optimality");
}

CriterionResult criterion_oracle(const SuiteOptions& opts) {
    Tally t;
    SeededRng rng(opts.seed ^ 0x0dacULL);
    std::size_t graphs = 0;
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + rng.below(9);
        const Graph g = random_graph(rng, n);
        ++graphs;
        const Rational memo = dim(g);
        const Rational plain = dim_unmemoized(g);
        t.check(memo == plain, [&] {
            return describe(g) + ": memoized " + memo.str() + ", unmemoized " + plain.str();
        });
        for (int r = 0; r < 5; ++r) {
            const auto perm = rng.permutation(g.order());
            const Rational moved = dim(relabel(g, perm));
            t.check(moved == memo, [&] {
                return describe(g) + ": relabeled dim " + moved.str() + " != " + memo.str();
            });
        }
    }
    t.require_at_least(graphs, 300, "graphs with n <= 9");
    return t.finish(10, "memoized = unmemoized, relabeling invariance");
}

CriterionResult criterion_performance(const SuiteOptions& opts) {
    Tally t;
    const Graph g = erdos_renyi(25, Rational(1, 4), opts.seed);
    const auto start = std::chrono::steady_clock::now();
    DimensionEngine engine(g);
    const Rational d = engine.dim();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.check(secs <= 30.0, [&] { return "took " + std::to_string(secs) + " s"; });
    std::ostringstream os;
    os << "G(25,1/4) m=" << g.size() << " dim=" << d << " in " << secs << " s, "
       << engine.cache_size() << " cached subsets; unmemoized run skipped above n=12";
    t.note(os.str());
    return t.finish(11, "performance smoke test G(25, 1/4) <= 30 s");
}

using CriterionFn = CriterionResult (*)(const SuiteOptions&);

constexpr std::array<CriterionFn, kCriterionCount> kCriteria{
    criterion_base_values, criterion_join,        criterion_union,    criterion_ball_sphere,
    criterion_cover_identity, criterion_pure,     criterion_constructions, criterion_bounds,
    criterion_ecc,         criterion_oracle,      criterion_performance};

} // namespace

CriterionResult run_criterion(int id, const SuiteOptions& options) {
    if (id < 1 || id > kCriterionCount)
        throw std::out_of_range("criterion id " + std::to_string(id));
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = kCriteria[static_cast<std::size_t>(id - 1)](options);
    } catch (const std::exception& e) {
        r.id = id;
        r.title = "criterion " + std::to_string(id);
        r.passed = false;
        r.detail = std::string("aborted: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

SuiteResult run_suite(const SuiteOptions& options) {
    SuiteResult out;
    out.criteria.resize(kCriterionCount);
    const unsigned workers = std::max(1U, options.threads);
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int id = static_cast<int>(w) + 1; id <= kCriterionCount;
                 id += static_cast<int>(workers))
                out.criteria[static_cast<std::size_t>(id - 1)] = run_criterion(id, options);
        });
    }
    pool.clear();
    return out;
}

} // namespace graphdim
