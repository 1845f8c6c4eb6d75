#include "cbsep/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "cbsep/baseline.hpp"
#include "cbsep/errors.hpp"
#include "cbsep/graph.hpp"
#include "cbsep/partial_clique.hpp"
#include "cbsep/relaxation.hpp"
#include "cbsep/report.hpp"
#include "cbsep/selftest.hpp"

namespace cbsep {
namespace {

Edge parse_edge_token(const std::string& token) {
    const std::size_t sep = token.find_first_of("-,");
    if (sep == std::string::npos || sep == 0 || sep + 1 >= token.size()) {
        throw std::invalid_argument("bad edge token '" + token +
                                    "'; expected u-v or u,v");
    }
    int u = 0, v = 0;
    try {
        std::size_t used = 0;
        u = std::stoi(token.substr(0, sep), &used);
        if (used != sep) throw std::invalid_argument(token);
        v = std::stoi(token.substr(sep + 1), &used);
        if (used != token.size() - sep - 1) throw std::invalid_argument(token);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad edge token '" + token +
                                    "'; expected u-v or u,v");
    }
    if (u == v) throw std::invalid_argument("edge token '" + token +
                                            "' names a self-loop");
    return Edge{std::min(u, v), std::max(u, v)};
}

int cmd_recognize(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph_file(cfg.inputs.front());
    RecognizeReport report;
    report.config = cfg;
    if (auto pc = as_partial_clique(g)) {
        report.is_partial_clique = true;
        report.removed_sets = pc->removed_sets();
    } else {
        auto triple = triangle_violation(g);
        if (!triple) {
            throw PropertyViolation(
                "recognition failed but no violating triple exists");
        }
        report.violating_triple = {(*triple)[0], (*triple)[1], (*triple)[2]};
    }
    out << (cfg.format == "json" ? to_json_string(report) : render_text(report));
    return 0;
}

int cmd_complete(const RunConfig& cfg, const std::vector<std::string>& keep_tokens,
                 std::ostream& out) {
    const Graph g = load_graph_file(cfg.inputs.front());
    std::set<Edge> keep_set;
    for (const std::string& token : keep_tokens)
        keep_set.insert(parse_edge_token(token));
    const std::vector<Edge> keep(keep_set.begin(), keep_set.end());

    CompleteReport report;
    report.config = cfg;
    report.kept_edges = static_cast<int>(keep.size());
    report.discarded_edges = g.edge_count() - report.kept_edges;
    if (auto pc = unique_partial_clique_completion(g, keep)) {
        report.found = true;
        report.removed_sets = pc->removed_sets();
    } else {
        // Recover the first kept edge whose endpoints the discarded edges
        // force into one removed set.
        std::vector<Edge> discarded;
        for (const Edge& e : g.edges())
            if (!keep_set.count(e)) discarded.push_back(e);
        const auto comps = connected_components(Graph(g.n(), discarded));
        std::vector<int> comp_of(g.n(), -1);
        for (std::size_t k = 0; k < comps.size(); ++k)
            for (int v : comps[k]) comp_of[v] = static_cast<int>(k);
        for (const Edge& e : keep) {
            if (comp_of[e.first] == comp_of[e.second]) {
                report.blocking_edge = {e.first, e.second};
                break;
            }
        }
        if (report.blocking_edge.empty()) {
            throw PropertyViolation(
                "completion reported none without a blocking kept edge");
        }
    }
    out << (cfg.format == "json" ? to_json_string(report) : render_text(report));
    return 0;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph_file(cfg.inputs.front());
    const ProgramInstance inst(g, cfg.c, cfg.p, cfg.balance_scale);
    SolveDocument doc{cfg, gap_report(inst, cfg.trials, cfg.seed, cfg.limit)};
    out << (cfg.format == "json" ? to_json_string(doc) : render_text(doc));
    return 0;
}

int cmd_selftest(const std::string& level, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<CheckOutcome> outcomes = run_selftest(level);
    bool all_pass = true;
    for (const CheckOutcome& o : outcomes) {
        out << (o.pass ? "[PASS] " : "[FAIL] ") << o.name << ": " << o.detail
            << "\n";
        all_pass = all_pass && o.pass;
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    out << "level: " << level << "  checks: " << outcomes.size()
        << "  elapsed: " << elapsed.count() << " s\n";
    out << (all_pass ? "all checks passed\n" : "CHECK FAILURES PRESENT\n");
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorial geometry of the concave balanced-separator "
                 "relaxation: recognition, completion, vertex search, "
                 "rounding, and self-verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string graph_file;
    std::vector<std::string> keep_tokens;
    std::string level;

    const auto add_common = [&](CLI::App* sub, bool solver_opts) {
        sub->add_option("--seed", cfg.seed, "random seed (echoed in output)")
            ->capture_default_str();
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        sub->add_option("--tol-psd", cfg.tol_psd,
                        "semidefinite tolerance recorded in the config echo")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        if (solver_opts) {
            sub->add_option("--c", cfg.c, "balance parameter in (0, 1/2]")
                ->capture_default_str();
            sub->add_option("--p", cfg.p, "objective exponent in (0, 2]")
                ->capture_default_str();
            sub->add_option("--trials", cfg.trials, "rounding trials")
                ->capture_default_str();
            sub->add_option("--limit", cfg.limit, "enumeration size limit")
                ->capture_default_str();
            sub->add_option("--balance-scale", cfg.balance_scale,
                            "balance bound scale: 1 (all-pairs form) or 2 "
                            "(squared-distance form)")
                ->check(CLI::IsMember({1.0, 2.0}))
                ->capture_default_str();
        }
    };

    CLI::App* recognize =
        app.add_subcommand("recognize", "decide partial-clique membership");
    recognize->add_option("graph-file", graph_file, "graph in 'n m' + edge-list form")
        ->required();
    add_common(recognize, false);

    CLI::App* complete = app.add_subcommand(
        "complete", "unique partial-clique completion from kept edges");
    complete->add_option("graph-file", graph_file, "graph in 'n m' + edge-list form")
        ->required();
    complete->add_option("keep", keep_tokens, "kept edges, e.g. 0-1 0-2");
    add_common(complete, false);

    CLI::App* solve = app.add_subcommand(
        "solve", "characterized-vertex search, rounding, and exact comparison");
    solve->add_option("graph-file", graph_file, "graph in 'n m' + edge-list form")
        ->required();
    add_common(solve, true);

    CLI::App* selftest =
        app.add_subcommand("selftest", "run the verification suites");
    selftest->add_option("level", level, "quick or full")
        ->required()
        ->check(CLI::IsMember({"quick", "full"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (recognize->parsed()) {
            cfg.command = "recognize";
            cfg.inputs = {graph_file};
            return cmd_recognize(cfg, out);
        }
        if (complete->parsed()) {
            cfg.command = "complete";
            cfg.inputs = {graph_file};
            return cmd_complete(cfg, keep_tokens, out);
        }
        if (solve->parsed()) {
            cfg.command = "solve";
            cfg.inputs = {graph_file};
            return cmd_solve(cfg, out);
        }
        cfg.command = "selftest";
        return cmd_selftest(level, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cbsep
