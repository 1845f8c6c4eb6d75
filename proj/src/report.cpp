#include "cbsep/report.hpp"

#include <sstream>

namespace cbsep {
namespace {

using nlohmann::ordered_json;

ordered_json sets_to_json(const std::vector<VertexSet>& sets) {
    ordered_json arr = ordered_json::array();
    for (const VertexSet& s : sets) arr.push_back(s);
    return arr;
}

std::vector<VertexSet> sets_from_json(const ordered_json& j) {
    std::vector<VertexSet> out;
    for (const auto& item : j) out.push_back(item.get<VertexSet>());
    return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string config_text(const RunConfig& cfg) {
    std::ostringstream os;
    os << "command: " << cfg.command;
    for (const std::string& in : cfg.inputs) os << " " << in;
    os << "\n";
    os << "config: c=" << cfg.c << " p=" << cfg.p << " trials=" << cfg.trials
       << " seed=" << cfg.seed << " limit=" << cfg.limit
       << " tol-psd=" << cfg.tol_psd << " balance-scale=" << cfg.balance_scale
       << "\n";
    return os.str();
}

}  // namespace

std::string format_vertex_set(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

ordered_json config_to_json(const RunConfig& cfg) {
    return ordered_json{{"command", cfg.command}, {"inputs", cfg.inputs},
                        {"c", cfg.c},            {"p", cfg.p},
                        {"trials", cfg.trials},  {"seed", cfg.seed},
                        {"limit", cfg.limit},    {"tol_psd", cfg.tol_psd},
                        {"balance_scale", cfg.balance_scale},
                        {"format", cfg.format}};
}

RunConfig config_from_json(const ordered_json& j) {
    RunConfig cfg;
    cfg.command = j.at("command").get<std::string>();
    cfg.inputs = j.at("inputs").get<std::vector<std::string>>();
    cfg.c = j.at("c").get<double>();
    cfg.p = j.at("p").get<double>();
    cfg.trials = j.at("trials").get<int>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.limit = j.at("limit").get<int>();
    cfg.tol_psd = j.at("tol_psd").get<double>();
    cfg.balance_scale = j.at("balance_scale").get<double>();
    cfg.format = j.at("format").get<std::string>();
    return cfg;
}

ordered_json cut_to_json(const CutResult& cut) {
    return ordered_json{{"side", cut.side},
                        {"cut_size", cut.cut_size},
                        {"balance", cut.balance},
                        {"trials_used", cut.trials_used},
                        {"balanced_trials", cut.balanced_trials},
                        {"seed", cut.seed}};
}

CutResult cut_from_json(const ordered_json& j) {
    CutResult cut;
    cut.side = j.at("side").get<VertexSet>();
    cut.cut_size = j.at("cut_size").get<int>();
    cut.balance = j.at("balance").get<double>();
    cut.trials_used = j.at("trials_used").get<int>();
    cut.balanced_trials = j.at("balanced_trials").get<int>();
    cut.seed = j.at("seed").get<std::uint64_t>();
    return cut;
}

ordered_json gap_to_json(const GapReport& r) {
    return ordered_json{{"n", r.n},
                        {"m", r.m},
                        {"c", r.c},
                        {"p", r.p},
                        {"balance_scale", r.balance_scale},
                        {"warnings", r.warnings},
                        {"window_empty", r.window_empty},
                        {"exact_value", r.exact_value},
                        {"exact_side", r.exact_side},
                        {"solver_value", r.solver_value},
                        {"solver_kind", r.solver_kind},
                        {"solver_lambda", r.solver_lambda},
                        {"solver_point", r.solver_point},
                        {"gamma_count", r.gamma_count},
                        {"type1_count", r.type1_count},
                        {"type2_count", r.type2_count},
                        {"rounded", cut_to_json(r.rounded)},
                        {"rounded_candidate_index", r.rounded_candidate_index},
                        {"solver_to_exact", r.solver_to_exact},
                        {"rounded_to_exact", r.rounded_to_exact}};
}

GapReport gap_from_json(const ordered_json& j) {
    GapReport r;
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.c = j.at("c").get<double>();
    r.p = j.at("p").get<double>();
    r.balance_scale = j.at("balance_scale").get<double>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.window_empty = j.at("window_empty").get<bool>();
    r.exact_value = j.at("exact_value").get<int>();
    r.exact_side = j.at("exact_side").get<VertexSet>();
    r.solver_value = j.at("solver_value").get<double>();
    r.solver_kind = j.at("solver_kind").get<std::string>();
    r.solver_lambda = j.at("solver_lambda").get<double>();
    r.solver_point = j.at("solver_point").get<std::vector<double>>();
    r.gamma_count = j.at("gamma_count").get<long>();
    r.type1_count = j.at("type1_count").get<long>();
    r.type2_count = j.at("type2_count").get<long>();
    r.rounded = cut_from_json(j.at("rounded"));
    r.rounded_candidate_index = j.at("rounded_candidate_index").get<long>();
    r.solver_to_exact = j.at("solver_to_exact").get<double>();
    r.rounded_to_exact = j.at("rounded_to_exact").get<double>();
    return r;
}

std::string to_json_string(const SolveDocument& doc) {
    return dump(ordered_json{{"config", config_to_json(doc.config)},
                             {"report", gap_to_json(doc.report)}});
}

SolveDocument parse_solve_document(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    return SolveDocument{config_from_json(j.at("config")),
                         gap_from_json(j.at("report"))};
}

std::string to_json_string(const RecognizeReport& r) {
    return dump(ordered_json{{"config", config_to_json(r.config)},
                             {"is_partial_clique", r.is_partial_clique},
                             {"removed_sets", sets_to_json(r.removed_sets)},
                             {"violating_triple", r.violating_triple}});
}

RecognizeReport parse_recognize_report(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    RecognizeReport r;
    r.config = config_from_json(j.at("config"));
    r.is_partial_clique = j.at("is_partial_clique").get<bool>();
    r.removed_sets = sets_from_json(j.at("removed_sets"));
    r.violating_triple = j.at("violating_triple").get<std::vector<int>>();
    return r;
}

std::string to_json_string(const CompleteReport& r) {
    return dump(ordered_json{{"config", config_to_json(r.config)},
                             {"found", r.found},
                             {"removed_sets", sets_to_json(r.removed_sets)},
                             {"kept_edges", r.kept_edges},
                             {"discarded_edges", r.discarded_edges},
                             {"blocking_edge", r.blocking_edge}});
}

CompleteReport parse_complete_report(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    CompleteReport r;
    r.config = config_from_json(j.at("config"));
    r.found = j.at("found").get<bool>();
    r.removed_sets = sets_from_json(j.at("removed_sets"));
    r.kept_edges = j.at("kept_edges").get<int>();
    r.discarded_edges = j.at("discarded_edges").get<int>();
    r.blocking_edge = j.at("blocking_edge").get<std::vector<int>>();
    return r;
}

std::string render_text(const SolveDocument& doc) {
    const GapReport& r = doc.report;
    std::ostringstream os;
    os << config_text(doc.config);
    os << "graph: n=" << r.n << " m=" << r.m << "\n";
    for (const std::string& w : r.warnings) os << "warning: " << w << "\n";
    const BalanceWindow w = balance_window(r.n, r.c);
    if (r.window_empty) {
        os << "window: empty\n";
        os << "exact: (window empty)\n";
    } else {
        os << "window: sizes " << w.min_size << ".." << w.max_size << "\n";
        os << "exact: " << r.exact_value << "  side "
           << format_vertex_set(r.exact_side) << "\n";
    }
    os << "solver: value=" << r.solver_value << " kind=" << r.solver_kind
       << " lambda=" << r.solver_lambda << "\n";
    os << "candidates: gamma=" << r.gamma_count << " type1=" << r.type1_count
       << " type2=" << r.type2_count << "\n";
    os << "rounded: cut=" << r.rounded.cut_size
       << " side=" << format_vertex_set(r.rounded.side)
       << " balance=" << r.rounded.balance << " balanced-trials="
       << r.rounded.balanced_trials << "/" << r.rounded.trials_used
       << " candidate-index=" << r.rounded_candidate_index << "\n";
    if (!r.window_empty) {
        os << "ratio: solver/exact=" << r.solver_to_exact
           << " rounded/exact=" << r.rounded_to_exact << "\n";
    }
    return os.str();
}

std::string render_text(const RecognizeReport& r) {
    std::ostringstream os;
    os << config_text(r.config);
    if (r.is_partial_clique) {
        os << "partial-clique: removed";
        if (r.removed_sets.empty()) {
            os << " (none)";
        } else {
            for (const VertexSet& s : r.removed_sets)
                os << " " << format_vertex_set(s);
        }
        os << "\n";
    } else {
        os << "not a partial-clique\n";
        os << "violating triple: (" << r.violating_triple[0] << ","
           << r.violating_triple[1] << "," << r.violating_triple[2] << ")\n";
    }
    return os.str();
}

std::string render_text(const CompleteReport& r) {
    std::ostringstream os;
    os << config_text(r.config);
    os << "kept " << r.kept_edges << " edges, discarded " << r.discarded_edges
       << "\n";
    if (r.found) {
        os << "completion: removed";
        if (r.removed_sets.empty()) {
            os << " (none)";
        } else {
            for (const VertexSet& s : r.removed_sets)
                os << " " << format_vertex_set(s);
        }
        os << "\n";
        os << "verified: derived graph keeps every kept edge and drops every "
              "discarded edge\n";
    } else {
        os << "completion: none\n";
        os << "blocked: kept edge " << r.blocking_edge[0] << "-"
           << r.blocking_edge[1]
           << " joins two vertices forced into one removed set\n";
    }
    return os.str();
}

}  // namespace cbsep
