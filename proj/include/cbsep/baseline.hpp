#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cbsep/graph.hpp"
#include "cbsep/relaxation.hpp"
#include "cbsep/rounding.hpp"
#include "cbsep/vertex_solver.hpp"

namespace cbsep {

/// Integer side sizes s allowed by the strict balance window cn < s < (1-c)n.
struct BalanceWindow {
    int min_size = 0;
    int max_size = -1;
    bool empty() const { return min_size > max_size; }
    bool contains(int s) const { return min_size <= s && s <= max_size; }
};

BalanceWindow balance_window(int n, double c);

struct ExactCut {
    VertexSet side;    // lexicographically smallest minimizing side
    int cut_size = 0;
};

/// Brute-force minimum balanced cut: scans every vertex subset in the
/// window, counting crossing edges from the edge list.  Throws
/// std::invalid_argument when n > 20 or the window is empty.
ExactCut exact_min_balanced_cut(const Graph& g, double c);

/// Independent re-derivation used to cross-check the primary scan: iterates
/// subsets as complements of descending masks and counts crossing pairs from
/// the adjacency matrix.  Must agree with exact_min_balanced_cut exactly.
ExactCut exact_min_balanced_cut_complement_scan(const Graph& g, double c);

/// Erdos-Renyi style graph with each pair included independently with
/// probability edge_prob, deterministically from the seed.
Graph random_graph(int n, double edge_prob, std::uint64_t seed);

struct SliceGridResult {
    bool ok = false;                      // minimizer within one cell of a candidate
    bool psd_included = false;
    long feasible_grid_points = 0;
    std::vector<double> grid_minimizer;   // 3 coordinates
    double grid_min_value = 0.0;
    std::vector<double> nearest_candidate;
    double candidate_value = 0.0;
    double candidate_distance = 0.0;      // max-coordinate distance to nearest
};

/// Grid search on the 3-variable slice: minimize x1^p + x2^p + x3^p over the
/// cube [0,2]^3 cut by the linear triangle inequalities and the balance
/// hyperplane (optionally also the semidefinite constraint via the
/// eigenvalue oracle), then test whether the grid minimizer lies within one
/// grid cell (per coordinate) of an enumerated extreme candidate: a scaled
/// indicator at its hyperplane crossing or at full scale 2.
/// Requires 0 < p < 1/2 and 0 < step <= 0.05.
SliceGridResult slice_grid_check(double p, double c, double step, bool include_psd,
                                 double balance_scale = 1.0);

struct GapReport {
    // instance echo
    int n = 0;
    int m = 0;
    double c = 0.0;
    double p = 0.0;
    double balance_scale = 1.0;
    std::vector<std::string> warnings;

    bool window_empty = false;
    int exact_value = -1;                 // -1 when the window is empty
    VertexSet exact_side;

    double solver_value = 0.0;
    std::string solver_kind;
    double solver_lambda = 0.0;
    std::vector<double> solver_point;     // upper-triangle entries of the best point
    long gamma_count = 0;
    long type1_count = 0;
    long type2_count = 0;

    CutResult rounded;                    // best rounding across all candidates
    long rounded_candidate_index = 0;     // index into the sorted candidate list

    double solver_to_exact = -1.0;        // ratios; 0/0 reported as 1, -1 when undefined
    double rounded_to_exact = -1.0;

    bool operator==(const GapReport& other) const = default;
};

/// End-to-end comparison: exact optimum (when the window is nonempty),
/// characterized-vertex solve, and hyperplane rounding applied to every
/// candidate with the best cut kept.  Verifies solver value <= exact value
/// and throws PropertyViolation on violation.  Requires n <= 12.
GapReport gap_report(const ProgramInstance& inst, int trials, std::uint64_t seed,
                     int limit = kDefaultEnumerationLimit);

}  // namespace cbsep
