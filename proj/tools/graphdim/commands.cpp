#include "graphdim/commands.hpp"

#include "graphdim/cliques.hpp"
#include "graphdim/cover_formula.hpp"
#include "graphdim/dimension.hpp"
#include "graphdim/ecc.hpp"
#include "graphdim/errors.hpp"
#include "graphdim/formats.hpp"
#include "graphdim/generators.hpp"
#include "graphdim/report.hpp"
#include "graphdim/suite.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace graphdim::cli {

namespace {

struct InputArgs {
    std::string file;
    std::string format;

    Graph load() const {
        std::optional<GraphFormat> f;
        if (!format.empty()) {
            f = parse_format_name(format);
            if (!f)
                throw InvalidInput("unknown format '" + format + "'");
        }
        return read_graph_file(file, f);
    }
};

void add_input(CLI::App* cmd, InputArgs& in) {
    cmd->add_option("FILE", in.file, "graph file (edge list, or graph6 for *.g6)")->required();
    cmd->add_option("--format", in.format, "edges | graph6 (default: from extension)");
}

std::uint64_t node_budget_from_env() {
    const char* env = std::getenv("GRAPHDIM_BUDGET");
    if (!env || !*env)
        return EccOptions{}.node_budget;
    std::uint64_t value = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value == 0)
        throw InvalidInput("GRAPHDIM_BUDGET must be a positive integer, got '" + std::string(s) + "'");
    return value;
}

std::string members(const VertexSet& s) {
    std::string out;
    for (Vertex v : s)
        out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

const char* yes_no(bool b) {
    return b ? "true" : "false";
}

class LawPrinter {
public:
    explicit LawPrinter(std::ostream& out) : out_(out) {}

    void report(bool ok, const std::string& law, const std::string& detail) {
        out_ << (ok ? "PASS " : "FAIL ") << law << ": " << detail << '\n';
        failed_ = failed_ || !ok;
    }
    void law(const std::string& name, const LawCheck& c) {
        report(c.holds(), name, c.lhs.str() + (c.holds() ? " = " : " != ") + c.rhs.str());
    }
    bool failed() const { return failed_; }

private:
    std::ostream& out_;
    bool failed_ = false;
};

void verify_ball(const Graph& g, LawPrinter& p) {
    DimensionEngine engine(g);
    std::size_t bad = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (engine.vertex_dim(v) != dim(unit_ball(g, v)))
            ++bad;
    p.report(bad == 0, "ball",
             std::to_string(g.order() - bad) + "/" + std::to_string(g.order()) +
                 " vertices with vertex dim = dim of unit ball");
}

void verify_union(const Graph& g, LawPrinter& p) {
    if (g.empty()) {
        p.report(true, "union", "empty graph, nothing to check");
        return;
    }
    std::vector<Graph> parts;
    for (const auto& c : connected_components(g))
        parts.push_back(induced_subgraph(g, c).graph);
    p.law("union (" + std::to_string(parts.size()) + " components)", check_disjoint_union_law(parts));
}

void verify_join(const Graph& g, LawPrinter& p) {
    p.law("join (cone G + K_1)", check_join_law(g, complete_graph(1)));
    p.law("join (suspension G + 2K_1)", check_join_law(g, edgeless_graph(2)));
    const auto co = connected_components(complement(g));
    if (co.size() > 1) {
        std::vector<Graph> parts;
        for (const auto& c : co)
            parts.push_back(induced_subgraph(g, c).graph);
        p.law("join (G as join of " + std::to_string(parts.size()) + " co-components)",
              check_iterated_join_law(parts));
    }
}

void verify_theorem4(const Graph& g, const EccOptions& ecc, LawPrinter& p) {
    if (g.empty()) {
        p.report(true, "theorem4", "empty graph, nothing to check");
        return;
    }
    const auto cover = vertex_complete_min_cover(g, ecc);
    const auto id = evaluate_cover_identity(g, cover);
    p.report(id.holds(), "theorem4",
             "(|G|-|K_L|) dim G = " + id.lhs.str() + (id.holds() ? " = " : " != ") +
                 id.rhs.str() + " (cover of " + std::to_string(id.cover_size) +
                 ", |K_L| = " + std::to_string(id.common_order) + ")");
}

void verify_bounds(const Graph& g, LawPrinter& p) {
    if (g.empty()) {
        p.report(true, "bounds", "empty graph, nothing to check");
        return;
    }
    const auto b = bounds_report(g);
    const auto v = b.violations();
    std::string detail = "dim = " + b.dim.str() + ", k = " + std::to_string(b.omega) +
                         ", lower_basic = " + b.lower_basic.str() +
                         (b.saturated_lower ? " (saturated)" : "");
    if (b.lower_connected)
        detail += ", lower_connected = " + b.lower_connected->str() +
                  (b.saturated_lower_connected ? " (saturated)" : "");
    detail += ", upper = " + b.upper.str() + (b.saturated_upper ? " (saturated)" : "");
    for (const auto& s : v)
        detail += "; violated: " + s;
    p.report(v.empty(), "bounds", detail);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact inductive graph dimension toolkit", "graphdim"};
    app.require_subcommand(1);

    InputArgs input;
    bool json = false;
    bool timings = false;
    unsigned threads = 1;
    std::uint64_t budget = 0;
    std::string law = "all";
    GenSpec gen;
    std::string gen_params, gen_out, gen_format = "edges";
    SuiteOptions suite;
    std::string suite_corpus;

    auto* dim_cmd = app.add_subcommand("dim", "print the dimension as p/q");
    add_input(dim_cmd, input);
    dim_cmd->add_flag("--json", json, "emit the full analysis report as JSON");
    dim_cmd->add_flag("--timings", timings, "include timings_ms in the JSON report");
    dim_cmd->add_option("--threads", threads, "threads for the top-level vertex sum");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "per-vertex dimensions");
    add_input(spectrum_cmd, input);

    auto* cliques_cmd = app.add_subcommand("cliques", "maximal cliques, omega, gamma");
    add_input(cliques_cmd, input);

    auto* ecc_cmd = app.add_subcommand("ecc", "minimum edge clique cover");
    add_input(ecc_cmd, input);
    ecc_cmd->add_option("--budget", budget, "branch node budget (default 10^7 or $GRAPHDIM_BUDGET)");

    auto* verify_cmd = app.add_subcommand("verify", "exact checks of the dimension laws");
    add_input(verify_cmd, input);
    verify_cmd->add_option("--law", law, "join | union | theorem4 | ball | bounds | all")
        ->check(CLI::IsMember({"join", "union", "theorem4", "ball", "bounds", "all"}));
    verify_cmd->add_option("--budget", budget, "branch node budget for the cover search");

    auto* gen_cmd = app.add_subcommand("gen", "emit a generated graph");
    gen_cmd->add_option("--family", gen.family, "graph family")
        ->required()
        ->check(CLI::IsMember(generator_families()));
    gen_cmd->add_option("--params", gen_params, "family parameters, e.g. k=4,n=12");
    gen_cmd->add_option("--seed", gen.seed, "seed for random families");
    gen_cmd->add_option("--out", gen_out, "output file (default stdout)");
    gen_cmd->add_option("--format", gen_format, "edges | graph6 | dot")
        ->check(CLI::IsMember({"edges", "edge_list", "graph6", "g6", "dot"}));

    auto* suite_cmd = app.add_subcommand("suite", "run the acceptance property suite (JSON summary)");
    suite_cmd->add_option("--max-n", suite.max_n, "largest order in the random connected corpus");
    suite_cmd->add_option("--samples", suite.samples, "random connected corpus size");
    suite_cmd->add_option("--seed", suite.seed, "suite seed");
    suite_cmd->add_option("--corpus", suite_corpus, "graph6 file of connected graphs (n <= 7 used)");
    suite_cmd->add_option("--threads", suite.threads, "criteria run concurrently");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
            sub && e.get_name() != "RequiredError")
            err << "error: " << e.what() << "\n\n" << sub->help();
        else
            err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    try {
        EccOptions ecc;
        ecc.node_budget = budget ? budget : node_budget_from_env();

        if (dim_cmd->parsed()) {
            const Graph g = input.load();
            if (json) {
                ReportOptions ro;
                ro.label = input.file;
                ro.ecc = ecc;
                ro.dim.threads = threads;
                ro.timings = timings;
                out << analysis_report(g, ro).dump(2) << '\n';
            } else {
                out << dim(g, DimOptions{.memoize = true, .threads = threads}) << '\n';
            }
            return kOk;
        }
        if (spectrum_cmd->parsed()) {
            const auto rep = dim_spectrum(input.load());
            for (std::size_t v = 0; v < rep.vertex_dims.size(); ++v)
                out << v << ' ' << rep.vertex_dims[v] << '\n';
            out << "dim " << rep.graph_dim << '\n'
                << "uniform " << yes_no(rep.is_uniform) << '\n'
                << "pure " << yes_no(rep.is_pure) << '\n';
            return kOk;
        }
        if (cliques_cmd->parsed()) {
            const Graph g = input.load();
            const auto cl = maximal_cliques(g);
            for (const auto& c : cl)
                out << members(c) << '\n';
            if (!cl.empty()) {
                const auto s = clique_stats(cl);
                out << "omega " << s.omega << '\n'
                    << "gamma " << s.gamma << '\n'
                    << "pure " << yes_no(s.pure) << '\n';
            }
            return kOk;
        }
        if (ecc_cmd->parsed()) {
            const auto cover = min_edge_clique_cover(input.load(), ecc);
            for (const auto& c : cover.cliques)
                out << members(c) << '\n';
            out << "theta_e " << cover.size() << (cover.edgeless ? " (edgeless graph)" : "") << '\n';
            return kOk;
        }
        if (verify_cmd->parsed()) {
            const Graph g = input.load();
            LawPrinter p(out);
            const bool all = law == "all";
            if (all || law == "ball")
                verify_ball(g, p);
            if (all || law == "union")
                verify_union(g, p);
            if (all || law == "join")
                verify_join(g, p);
            if (all || law == "theorem4")
                verify_theorem4(g, ecc, p);
            if (all || law == "bounds")
                verify_bounds(g, p);
            return p.failed() ? kLawViolation : kOk;
        }
        if (gen_cmd->parsed()) {
            if (!gen_params.empty())
                gen.params = GenSpec::parse_params(gen_params);
            const Graph g = generate(gen);
            std::string text;
            if (gen_format == "dot")
                text = to_dot(g);
            else
                text = serialize_graph(g, *parse_format_name(gen_format));
            if (gen_out.empty()) {
                out << text;
            } else {
                std::ofstream f(gen_out, std::ios::binary);
                if (!(f << text))
                    throw ParseError("cannot write '" + gen_out + "'");
            }
            return kOk;
        }
        if (suite_cmd->parsed()) {
            if (!suite_corpus.empty()) {
                parse_graph6_lines(read_text_file(suite_corpus));
                suite.corpus_path = suite_corpus;
            }
            const auto result = run_suite(suite);
            out << suite_json(result, suite).dump(2) << '\n';
            return result.all_passed() ? kOk : kLawViolation;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ResourceLimit& e) {
        err << "error: resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kUsageError;
}

} // namespace graphdim::cli
