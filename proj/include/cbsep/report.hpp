#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cbsep/baseline.hpp"
#include "cbsep/graph.hpp"
#include "cbsep/partial_clique.hpp"
#include "cbsep/psd.hpp"

namespace cbsep {

/// Everything needed to reproduce a run; embedded in every report.
struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    double c = 0.3;
    double p = 1.0;
    int trials = 100;
    std::uint64_t seed = 1;
    int limit = kDefaultEnumerationLimit;
    double tol_psd = kPsdTol;
    double balance_scale = 1.0;
    std::string format = "text";

    bool operator==(const RunConfig& other) const = default;
};

struct RecognizeReport {
    RunConfig config;
    bool is_partial_clique = false;
    std::vector<VertexSet> removed_sets;
    std::vector<int> violating_triple;  // (i, j, k) when recognition fails

    bool operator==(const RecognizeReport& other) const = default;
};

struct CompleteReport {
    RunConfig config;
    bool found = false;
    std::vector<VertexSet> removed_sets;
    int kept_edges = 0;
    int discarded_edges = 0;
    std::vector<int> blocking_edge;     // kept edge inside a removed component

    bool operator==(const CompleteReport& other) const = default;
};

struct SolveDocument {
    RunConfig config;
    GapReport report;

    bool operator==(const SolveDocument& other) const = default;
};

nlohmann::ordered_json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json cut_to_json(const CutResult& cut);
CutResult cut_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json gap_to_json(const GapReport& report);
GapReport gap_from_json(const nlohmann::ordered_json& j);

std::string to_json_string(const SolveDocument& doc);
SolveDocument parse_solve_document(const std::string& text);

std::string to_json_string(const RecognizeReport& report);
RecognizeReport parse_recognize_report(const std::string& text);

std::string to_json_string(const CompleteReport& report);
CompleteReport parse_complete_report(const std::string& text);

std::string render_text(const SolveDocument& doc);
std::string render_text(const RecognizeReport& report);
std::string render_text(const CompleteReport& report);

std::string format_vertex_set(const VertexSet& s);

}  // namespace cbsep
