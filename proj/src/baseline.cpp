#include "cbsep/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cbsep/errors.hpp"
#include "cbsep/psd.hpp"
#include "cbsep/zpoint.hpp"

namespace cbsep {
namespace {

constexpr double kWindowSnapTol = 1e-9;
constexpr double kSliceTol = 1e-9;

int popcount(std::uint32_t mask) { return __builtin_popcount(mask); }

VertexSet mask_to_set(std::uint32_t mask, int n) {
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) out.push_back(v);
    return out;
}

void check_cut_preconditions(const Graph& g, double c, const BalanceWindow& w) {
    if (g.n() > 20) {
        throw std::invalid_argument(
            "exact balanced-cut enumeration limited to 20 vertices, got " +
            std::to_string(g.n()));
    }
    if (w.empty()) {
        throw std::invalid_argument(
            "balance window cn < |S| < (1-c)n admits no integer size for n = " +
            std::to_string(g.n()) + ", c = " + std::to_string(c));
    }
}

double safe_ratio(double num, double den) {
    if (den != 0.0) return num / den;
    return num == 0.0 ? 1.0 : -1.0;
}

}  // namespace

BalanceWindow balance_window(int n, double c) {
    if (n < 1) throw std::invalid_argument("balance window needs n >= 1");
    if (!(c > 0.0 && c <= 0.5))
        throw std::invalid_argument("balance parameter must lie in (0, 1/2]");
    // Strict lower bound s > cn; values within 1e-9 of an integer snap to it.
    const int min_size =
        static_cast<int>(std::floor(c * n + kWindowSnapTol)) + 1;
    // The window is symmetric (s allowed iff n - s allowed).
    return BalanceWindow{min_size, n - min_size};
}

ExactCut exact_min_balanced_cut(const Graph& g, double c) {
    const int n = g.n();
    const BalanceWindow w = balance_window(n, c);
    check_cut_preconditions(g, c, w);
    const auto& edges = g.edges();
    int best_cut = std::numeric_limits<int>::max();
    VertexSet best_side;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!w.contains(popcount(mask))) continue;
        int cut = 0;
        for (const Edge& e : edges)
            cut += ((mask >> e.first) ^ (mask >> e.second)) & 1u;
        if (cut > best_cut) continue;
        VertexSet side = mask_to_set(mask, n);
        if (cut < best_cut || side < best_side) {
            best_cut = cut;
            best_side = std::move(side);
        }
    }
    return ExactCut{std::move(best_side), best_cut};
}

ExactCut exact_min_balanced_cut_complement_scan(const Graph& g, double c) {
    const int n = g.n();
    const BalanceWindow w = balance_window(n, c);
    check_cut_preconditions(g, c, w);
    const std::uint32_t all = (1u << n) - 1;
    int best_cut = std::numeric_limits<int>::max();
    VertexSet best_side;
    // Descending co-mask order, taking the complement as the candidate side;
    // crossing pairs counted from the adjacency matrix instead of the edge
    // list.  Same canonical tie-break as the primary scan.
    for (std::uint32_t co = all + 1; co-- > 0;) {
        const std::uint32_t mask = all & ~co;
        if (!w.contains(popcount(mask))) continue;
        int cut = 0;
        for (int u = 0; u < n; ++u) {
            if (!(mask & (1u << u))) continue;
            for (int v = 0; v < n; ++v)
                if ((co & (1u << v)) && g.has_edge(u, v)) ++cut;
        }
        if (cut > best_cut) continue;
        VertexSet side = mask_to_set(mask, n);
        if (cut < best_cut || best_side.empty() || side < best_side) {
            best_cut = cut;
            best_side = std::move(side);
        }
    }
    return ExactCut{std::move(best_side), best_cut};
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < edge_prob) edges.emplace_back(i, j);
    return Graph(n, edges);
}

SliceGridResult slice_grid_check(double p, double c, double step, bool include_psd,
                                 double balance_scale) {
    if (!(p > 0.0 && p < 0.5))
        throw std::invalid_argument("slice exponent must lie in (0, 1/2)");
    if (!(step > 0.0 && step <= 0.05))
        throw std::invalid_argument("grid step must lie in (0, 0.05]");

    const ConstraintSystem sys(3, c, 1.0, balance_scale);
    const double bound = sys.balance_bound();

    // Extreme candidates: every removal family's indicator at its hyperplane
    // crossing lambda* = bound / m, and at full scale 2, whenever that
    // crossing happens at scale <= 2.
    std::vector<std::vector<double>> candidates;
    for_each_partial_clique(3, [&](const PartialClique& b) {
        const int m = b.derived_edge_count();
        if (m <= 0) return;
        const double lambda_star = bound / static_cast<double>(m);
        if (lambda_star > 2.0 + kSliceTol) return;
        candidates.push_back(scaled_indicator(b, std::min(lambda_star, 2.0)).upper());
        candidates.push_back(scaled_indicator(b, 2.0).upper());
    });

    const int steps = static_cast<int>(std::lround(2.0 / step));
    std::vector<double> value(steps + 1), powp(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        value[i] = std::min(2.0, i * step);
        powp[i] = std::pow(value[i], p);
    }

    SliceGridResult result;
    result.psd_included = include_psd;
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_point;
    for (int i1 = 0; i1 <= steps; ++i1) {
        for (int i2 = 0; i2 <= steps; ++i2) {
            for (int i3 = 0; i3 <= steps; ++i3) {
                const double x1 = value[i1], x2 = value[i2], x3 = value[i3];
                const double sum = x1 + x2 + x3;
                if (sum < bound - kSliceTol) continue;
                const double mx = std::max({x1, x2, x3});
                if (2.0 * mx > sum + kSliceTol) continue;  // linear triangle
                if (include_psd) {
                    ZPoint z(3);
                    z.set_index(0, x1);
                    z.set_index(1, x2);
                    z.set_index(2, x3);
                    if (!is_in_P(z)) continue;
                }
                ++result.feasible_grid_points;
                const double obj = powp[i1] + powp[i2] + powp[i3];
                if (obj < best) {
                    best = obj;
                    best_point = {x1, x2, x3};
                }
            }
        }
    }
    if (best_point.empty()) return result;  // nothing feasible: reported as failure

    result.grid_minimizer = best_point;
    result.grid_min_value = best;
    double best_dist = std::numeric_limits<double>::infinity();
    for (const auto& cand : candidates) {
        double dist = 0.0;
        for (int k = 0; k < 3; ++k)
            dist = std::max(dist, std::abs(cand[k] - best_point[k]));
        if (dist < best_dist) {
            best_dist = dist;
            result.nearest_candidate = cand;
        }
    }
    result.candidate_distance = best_dist;
    result.candidate_value = 0.0;
    for (int k = 0; k < 3; ++k)
        result.candidate_value += std::pow(result.nearest_candidate[k], p);
    result.ok = best_dist <= step + kSliceTol;
    return result;
}

GapReport gap_report(const ProgramInstance& inst, int trials, std::uint64_t seed,
                     int limit) {
    const int n = inst.g.n();
    if (n > 12) {
        throw std::invalid_argument(
            "end-to-end comparison limited to 12 vertices, got " + std::to_string(n));
    }
    GapReport report;
    report.n = n;
    report.m = static_cast<int>(inst.g.edges().size());
    report.c = inst.c;
    report.p = inst.p;
    report.balance_scale = inst.balance_scale;
    report.warnings = instance_warnings(inst);

    const BalanceWindow w = balance_window(n, inst.c);
    report.window_empty = w.empty();
    if (!report.window_empty) {
        ExactCut exact = exact_min_balanced_cut(inst.g, inst.c);
        report.exact_value = exact.cut_size;
        report.exact_side = std::move(exact.side);
    }

    const SolveResult solved = optimize_over_vertices(inst, limit);
    const VertexCandidate& best = solved.best();
    report.solver_value = best.value;
    report.solver_kind = to_string(best.kind);
    report.solver_lambda = best.lambda;
    report.solver_point = best.point.upper();
    report.gamma_count = solved.gamma_count;
    report.type1_count = solved.type1_count;
    report.type2_count = solved.type2_count;

    if (!report.window_empty &&
        report.solver_value > report.exact_value + 1e-9) {
        throw PropertyViolation(
            "relaxation direction violated: solver value " +
            std::to_string(report.solver_value) + " exceeds exact optimum " +
            std::to_string(report.exact_value));
    }

    // Round every candidate and keep the preferred cut; the best-valued
    // candidate does not always round to a balanced side.
    bool have = false;
    for (std::size_t k = 0; k < solved.candidates.size(); ++k) {
        CutResult cut =
            round(solved.candidates[k].point, inst.g, inst.c, trials, seed);
        if (!have || cut_preferred(cut, report.rounded, inst.c)) {
            report.rounded = std::move(cut);
            report.rounded_candidate_index = static_cast<long>(k);
            have = true;
        }
    }

    if (!report.window_empty) {
        report.solver_to_exact =
            safe_ratio(report.solver_value, report.exact_value);
        report.rounded_to_exact =
            safe_ratio(report.rounded.cut_size, report.exact_value);
    }
    return report;
}

}  // namespace cbsep
