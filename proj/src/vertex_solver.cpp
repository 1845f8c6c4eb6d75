#include "cbsep/vertex_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "cbsep/errors.hpp"
#include "cbsep/psd.hpp"

namespace cbsep {
namespace {

constexpr double kLambdaSlack = 1e-9;

void check_limit(int n, int limit, const char* what) {
    if (n > limit) {
        throw std::invalid_argument(
            std::string(what) + " over " + std::to_string(n) +
            " vertices exceeds the enumeration limit of " +
            std::to_string(limit) + "; raise the limit to proceed");
    }
}

// Visits every partial clique whose indicator ray crosses the balance
// hyperplane at scale lambda* <= 2 and hands (B, lambda_used) to fn.
template <typename Fn>
void for_each_gamma(const ProgramInstance& inst, int limit, Fn&& fn) {
    check_limit(inst.g.n(), limit, "candidate enumeration");
    const double bound = inst.system().balance_bound();
    for_each_partial_clique(inst.g.n(), [&](const PartialClique& b) {
        const int m = b.derived_edge_count();
        if (m <= 0) return;
        const double lambda_star = bound / static_cast<double>(m);
        if (lambda_star > 2.0 + kLambdaSlack) return;
        fn(b, std::min(lambda_star, 2.0));
    });
}

VertexCandidate make_candidate(const ProgramInstance& inst, CandidateKind kind,
                               const PartialClique& source, double lambda) {
    VertexCandidate cand{kind, source, lambda,
                         scaled_indicator(source, lambda), 0.0};
    cand.value = objective(cand.point, inst.g, inst.p);
    return cand;
}

bool candidate_less(const VertexCandidate& a, const VertexCandidate& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.point != b.point) return a.point < b.point;
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.source.removed_sets() < b.source.removed_sets();
}

// Every candidate generator must survive two independent round trips: its
// derived graph must be recognized back to the same family, and completing
// the complete graph while keeping exactly the derived edges must rebuild
// the same family.
void check_candidate_source(const VertexCandidate& cand, int n) {
    const Graph derived = cand.source.derived_graph();
    const auto recognized = as_partial_clique(derived);
    if (!recognized || !(*recognized == cand.source)) {
        throw PropertyViolation(
            "vertex candidate generator failed recognition round trip");
    }
    const auto completed =
        unique_partial_clique_completion(Graph::complete(n), derived.edges());
    if (!completed || !(*completed == cand.source)) {
        throw PropertyViolation(
            "vertex candidate generator failed completion round trip");
    }
}

}  // namespace

std::string to_string(CandidateKind kind) {
    switch (kind) {
        case CandidateKind::gamma: return "gamma";
        case CandidateKind::type1: return "type1";
        case CandidateKind::type2: return "type2";
    }
    return "unknown";
}

std::vector<VertexCandidate> gamma_points(const ProgramInstance& inst, int limit) {
    std::vector<VertexCandidate> out;
    for_each_gamma(inst, limit, [&](const PartialClique& b, double lambda) {
        out.push_back(make_candidate(inst, CandidateKind::gamma, b, lambda));
    });
    return out;
}

std::vector<VertexCandidate> type1_vertices(const ProgramInstance& inst, int limit) {
    std::vector<VertexCandidate> out;
    for_each_gamma(inst, limit, [&](const PartialClique& b, double lambda) {
        if (!is_biclique(b)) return;
        VertexCandidate cand = make_candidate(inst, CandidateKind::type1, b, lambda);
        if (!is_in_P(cand.point)) {
            throw PropertyViolation(
                "biclique gamma point left the spectrahedron at lambda = " +
                std::to_string(lambda));
        }
        out.push_back(std::move(cand));
    });
    return out;
}

std::vector<VertexCandidate> type2_vertices(const ProgramInstance& inst, int limit) {
    const int n = inst.g.n();
    check_limit(n, limit, "cut-class enumeration");
    const double bound = inst.system().balance_bound();
    std::vector<VertexCandidate> out;
    // One representative per unordered cut class: the side containing vertex 0.
    const std::uint32_t rest = static_cast<std::uint32_t>(n) - 1;
    for (std::uint32_t bits = 0; bits < (1u << rest); ++bits) {
        const std::uint32_t side_mask = (bits << 1) | 1u;
        const int s = __builtin_popcount(side_mask);
        if (s == n) continue;  // improper: empty complement
        const double spread =
            2.0 * static_cast<double>(s) * static_cast<double>(n - s);
        if (spread < bound - kLambdaSlack) continue;
        VertexSet side;
        for (int v = 0; v < n; ++v)
            if (side_mask & (1u << v)) side.push_back(v);
        // The generating family removes both cut sides (singletons drop out).
        std::vector<VertexSet> blocks;
        if (s >= 2) blocks.push_back(side);
        if (n - s >= 2) {
            VertexSet other;
            for (int v = 0; v < n; ++v)
                if (!(side_mask & (1u << v))) other.push_back(v);
            blocks.push_back(std::move(other));
        }
        VertexCandidate cand{CandidateKind::type2, PartialClique(n, blocks), 2.0,
                             cut_embedding(side, n), 0.0};
        cand.value = objective(cand.point, inst.g, inst.p);
        out.push_back(std::move(cand));
    }
    return out;
}

SolveResult optimize_over_vertices(const ProgramInstance& inst, int limit) {
    SolveResult result;
    long gamma_count = 0;
    for_each_gamma(inst, limit,
                   [&](const PartialClique&, double) { ++gamma_count; });
    result.gamma_count = gamma_count;

    std::vector<VertexCandidate> candidates = type1_vertices(inst, limit);
    result.type1_count = static_cast<long>(candidates.size());
    std::vector<VertexCandidate> t2 = type2_vertices(inst, limit);
    result.type2_count = static_cast<long>(t2.size());
    candidates.insert(candidates.end(), std::make_move_iterator(t2.begin()),
                      std::make_move_iterator(t2.end()));
    if (candidates.empty()) {
        throw std::runtime_error(
            "no candidate vertex meets the balance bound; the balance "
            "parameter admits no feasible scaled indicator");
    }
    for (const VertexCandidate& cand : candidates)
        check_candidate_source(cand, inst.g.n());
    std::sort(candidates.begin(), candidates.end(), candidate_less);
    result.candidates = std::move(candidates);
    result.best_index = 0;
    return result;
}

}  // namespace cbsep
