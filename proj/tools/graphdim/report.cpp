#include "graphdim/report.hpp"

#include "graphdim/cliques.hpp"
#include "graphdim/ecc.hpp"

#include <chrono>
#include <cstdio>
#include <string>

namespace graphdim::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

nlohmann::json vertex_list(const VertexSet& s) {
    auto arr = nlohmann::json::array();
    for (Vertex v : s)
        arr.push_back(v);
    return arr;
}

} // namespace

nlohmann::json rational_json(const Rational& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", r.to_double());
    return {{"exact", r.str()}, {"decimal", std::stod(buf)}};
}

nlohmann::json bounds_json(const BoundsReport& b) {
    nlohmann::json j{
        {"omega", b.omega},
        {"gamma", b.gamma},
        {"connected", b.connected},
        {"dim", b.dim.str()},
        {"lower_basic", b.lower_basic.str()},
        {"lower_connected", nullptr},
        {"lower_gamma", b.lower_gamma.str()},
        {"upper", b.upper.str()},
        {"saturated_lower", b.saturated_lower},
        {"saturated_lower_connected", b.saturated_lower_connected},
        {"saturated_upper", b.saturated_upper},
        {"violations", b.violations()},
    };
    if (b.lower_connected)
        j["lower_connected"] = b.lower_connected->str();
    return j;
}

nlohmann::json analysis_report(const Graph& g, const ReportOptions& options) {
    nlohmann::json timings = nlohmann::json::object();
    nlohmann::json j;
    j["label"] = options.label ? nlohmann::json(*options.label) : nlohmann::json(nullptr);
    j["graph"] = {{"n", g.order()}, {"m", g.size()},
                  {"components", connected_components(g).size()}};

    auto t0 = Clock::now();
    DimensionEngine engine(g, options.dim);
    const Rational d = engine.dim();
    j["dim"] = rational_json(d);
    auto vdims = nlohmann::json::array();
    std::vector<Rational> per_vertex;
    for (Vertex v = 0; v < g.order(); ++v) {
        per_vertex.push_back(engine.vertex_dim(v));
        vdims.push_back(per_vertex.back().str());
    }
    j["vertex_dims"] = vdims;
    j["uniform"] = std::all_of(per_vertex.begin(), per_vertex.end(),
                               [&](const Rational& x) { return x == per_vertex.front(); });
    timings["dim"] = ms_since(t0);

    j["omega"] = nullptr;
    j["gamma"] = nullptr;
    j["pure"] = nullptr;
    j["theta_e"] = nullptr;
    j["cover"] = nlohmann::json::array();
    j["theorem4"] = nullptr;
    j["bounds"] = nullptr;
    if (!g.empty()) {
        t0 = Clock::now();
        const auto stats = clique_stats(maximal_cliques(g, options.ecc.cliques));
        j["omega"] = stats.omega;
        j["gamma"] = stats.gamma;
        j["pure"] = stats.pure;
        timings["cliques"] = ms_since(t0);

        t0 = Clock::now();
        const auto ecc = min_edge_clique_cover(g, options.ecc);
        j["theta_e"] = ecc.size();
        for (const auto& c : ecc.cliques)
            j["cover"].push_back(vertex_list(c));
        timings["ecc"] = ms_since(t0);

        t0 = Clock::now();
        auto full_cover = ecc.cliques;
        for (Vertex v : isolated_vertices(g))
            full_cover.emplace_back(g.order(), std::initializer_list<Vertex>{v});
        std::sort(full_cover.begin(), full_cover.end(), lex_less);
        const auto id = evaluate_cover_identity(g, full_cover, &engine);
        j["theorem4"] = {{"lhs", id.lhs.str()},
                         {"rhs", id.rhs.str()},
                         {"equal", id.holds()},
                         {"cover_size", id.cover_size},
                         {"common_order", id.common_order}};
        timings["theorem4"] = ms_since(t0);

        j["bounds"] = bounds_json(bounds_report(g, d));
    }
    if (options.timings)
        j["timings_ms"] = timings;
    return j;
}

nlohmann::json suite_json(const SuiteResult& result, const SuiteOptions& options) {
    auto criteria = nlohmann::json::array();
    for (const auto& c : result.criteria)
        criteria.push_back({{"id", c.id},
                            {"title", c.title},
                            {"passed", c.passed},
                            {"checks", c.checks},
                            {"detail", c.detail},
                            {"seconds", c.seconds}});
    return {{"passed", result.all_passed()},
            {"options",
             {{"max_n", options.max_n},
              {"samples", options.samples},
              {"seed", options.seed},
              {"corpus", options.corpus_path ? nlohmann::json(*options.corpus_path)
                                             : nlohmann::json(nullptr)}}},
            {"criteria", criteria}};
}

} // namespace graphdim::cli
