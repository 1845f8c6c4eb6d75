#include "cbsep/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "cbsep/errors.hpp"

namespace cbsep {

ConstraintSystem::ConstraintSystem(int n_, double c_, double p_, double balance_scale_)
    : n(n_), c(c_), p(p_), balance_scale(balance_scale_) {
    if (n < 1) throw std::invalid_argument("constraint system needs n >= 1");
    if (!(c > 0.0 && c <= 0.5)) throw std::invalid_argument("balance fraction c must lie in (0, 1/2]");
    if (!(p > 0.0 && p <= 2.0)) throw std::invalid_argument("exponent p must lie in (0, 2]");
    if (balance_scale != 1.0 && balance_scale != 2.0)
        throw std::invalid_argument("balance scale must be 1 (standard) or 2 (strong)");
}

bool satisfies_triangle(const ZPoint& z, double p, double tol) {
    if (!(p > 0.0 && p <= 2.0)) throw std::invalid_argument("exponent p must lie in (0, 2]");
    const int n = z.n();
    const double e = p / 2.0;
    // Precompute z^(p/2); the constraint family is symmetric in the two
    // outer vertices, so scan i < k with every middle j.
    std::vector<double> pw(z.dim());
    for (int k = 0; k < z.dim(); ++k) pw[k] = std::pow(std::max(z.at_index(k), 0.0), e);
    auto f = [&](int i, int j) { return i < j ? pw[pair_index(n, i, j)] : pw[pair_index(n, j, i)]; };
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                if (f(i, k) > f(i, j) + f(j, k) + tol) return false;
            }
    return true;
}

bool satisfies_balance(const ZPoint& z, const ConstraintSystem& sys) {
    return z.sum() >= sys.balance_bound();
}

MembershipFlags membership(const ZPoint& z, const ConstraintSystem& sys, double tol) {
    MembershipFlags flags{};
    flags.in_T = satisfies_triangle(z, sys.p, tol);
    flags.in_H = z.sum() >= sys.balance_bound() - tol;
    flags.in_P = is_in_P(z, tol);
    flags.in_F = flags.in_T && flags.in_H && flags.in_P;
    if (sys.p == 1.0 && flags.in_P && !flags.in_T) {
        // Spectrahedron membership within tol only guarantees the square-root
        // triangle inequalities up to O(sqrt(tol)); re-test with that slack
        // before declaring the containment broken.
        if (!satisfies_triangle(z, 1.0, 3.0 * std::sqrt(tol) + 1e-12))
            throw PropertyViolation("point in the spectrahedron violates the p = 1 triangle region");
    }
    return flags;
}

ZPoint scaled_indicator(const PartialClique& b, double lambda) {
    if (lambda < 0.0 || lambda > 2.0)
        throw std::invalid_argument("indicator scale must lie in [0, 2]");
    ZPoint z(b.n());
    const Graph derived = b.derived_graph();
    for (const auto& [u, v] : derived.edges()) z.set(u, v, lambda);
    return z;
}

ZPoint blend(const PartialClique& u, const PartialClique& v, double lambda) {
    if (u.n() != v.n()) throw std::invalid_argument("blend endpoints must share a vertex count");
    if (lambda < 0.0 || lambda > 1.0) throw std::invalid_argument("blend parameter must lie in [0, 1]");
    const Graph gu = u.derived_graph();
    const Graph gv = v.derived_graph();
    ZPoint z(u.n());
    for (int i = 0; i < u.n(); ++i)
        for (int j = i + 1; j < u.n(); ++j) {
            const double a = gu.has_edge(i, j) ? 2.0 : 0.0;
            const double b = gv.has_edge(i, j) ? 2.0 : 0.0;
            const double val = lambda * a + (1.0 - lambda) * b;
            if (val != 0.0) z.set(i, j, val);
        }
    return z;
}

bool is_edge_of_R(const PartialClique& u, const PartialClique& v) {
    if (u.n() != v.n()) throw std::invalid_argument("edge test needs matching vertex counts");
    if (u == v) throw std::invalid_argument("edge test needs two distinct vertices of R");
    const int n = u.n();
    const Graph gu = u.derived_graph();
    const Graph gv = v.derived_graph();

    // Along the segment between the indicators, a pair's value is 2t (edge of
    // u only), 2 - 2t (edge of v only), 2 (both) or 0 (neither).  A triangle
    // inequality that is tight at the midpoint is tight on the whole segment,
    // and the minimal face containing the segment is cut out by exactly those
    // equalities.  On the moving pairs they reduce to links:
    //   - equal link:  two same-class pairs sharing a vertex whose third pair
    //     is a non-edge of both endpoints (x + 0 = y forces x = y);
    //   - anti link:   a u-only pair and a v-only pair sharing a vertex whose
    //     third pair is an edge of both (x + y = 2).
    // Each connected component of that link graph keeps one degree of
    // freedom, so the face is one-dimensional (an edge of the polytope)
    // exactly when the link graph on the moving pairs is connected.
    const int d = pair_count(n);
    std::vector<int> node(d, -1);  // moving pair -> dense node id
    int nodes = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (gu.has_edge(i, j) != gv.has_edge(i, j)) node[pair_index(n, i, j)] = nodes++;

    std::vector<int> parent(nodes);
    for (int t = 0; t < nodes; ++t) parent[t] = t;
    const std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            for (int k = i + 1; k < n; ++k) {
                if (k == j) continue;
                const int e1 = node[pair_index(n, std::min(i, j), std::max(i, j))];
                const int e2 = node[pair_index(n, std::min(j, k), std::max(j, k))];
                if (e1 < 0 || e2 < 0) continue;
                const bool cross_u = gu.has_edge(i, k);
                const bool cross_v = gv.has_edge(i, k);
                const bool same_class = gu.has_edge(i, j) == gu.has_edge(j, k);
                if (same_class ? (!cross_u && !cross_v) : (cross_u && cross_v))
                    unite(e1, e2);
            }
        }

    int components = 0;
    for (int t = 0; t < nodes; ++t)
        if (find(t) == t) ++components;
    return components == 1;
}

namespace {

int matrix_rank(std::vector<std::vector<double>> rows, int cols, double pivot_tol) {
    int rank = 0;
    const int nrows = static_cast<int>(rows.size());
    std::vector<char> used(nrows, 0);
    for (int c = 0; c < cols && rank < nrows; ++c) {
        // Full pivoting over the remaining rows for this column.
        int best = -1;
        double best_abs = pivot_tol;
        for (int r = 0; r < nrows; ++r)
            if (!used[r] && std::abs(rows[r][c]) > best_abs) {
                best = r;
                best_abs = std::abs(rows[r][c]);
            }
        if (best < 0) continue;
        used[best] = 1;
        ++rank;
        const double pivot = rows[best][c];
        for (int r = 0; r < nrows; ++r) {
            if (used[r] || rows[r][c] == 0.0) continue;
            const double f = rows[r][c] / pivot;
            for (int cc = c; cc < cols; ++cc) rows[r][cc] -= f * rows[best][cc];
        }
    }
    return rank;
}

}  // namespace

int polytope_face_rank(const ZPoint& z, double tol) {
    const int n = z.n();
    const int d = z.dim();
    std::vector<std::vector<double>> normals;
    auto check_and_collect = [&](double slack, std::vector<double> normal, const char* what) {
        if (slack < -tol) {
            std::ostringstream msg;
            msg << what << " constraint violated by " << -slack;
            throw std::invalid_argument(msg.str());
        }
        if (slack <= tol) normals.push_back(std::move(normal));
    };
    for (int k = 0; k < d; ++k) {
        std::vector<double> lower(d, 0.0), upper(d, 0.0);
        lower[k] = 1.0;
        upper[k] = 1.0;
        check_and_collect(z.at_index(k), std::move(lower), "cube lower");
        check_and_collect(2.0 - z.at_index(k), std::move(upper), "cube upper");
    }
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                // z_ik <= z_ij + z_jk written as slack >= 0.
                const double slack = z(i, j) + z(j, k) - z(i, k);
                std::vector<double> normal(d, 0.0);
                normal[pair_index(n, i, k)] += 1.0;
                normal[pair_index(n, std::min(i, j), std::max(i, j))] -= 1.0;
                normal[pair_index(n, std::min(j, k), std::max(j, k))] -= 1.0;
                check_and_collect(slack, std::move(normal), "triangle");
            }
    return matrix_rank(std::move(normals), d, 1e-9);
}

std::vector<ZPoint> vertices_of_R(int n, int limit) {
    std::vector<ZPoint> out;
    for (const auto& b : enumerate_partial_cliques(n, limit)) {
        ZPoint z = scaled_indicator(b, 2.0);
        const int rank = polytope_face_rank(z);
        if (rank != z.dim())
            throw PropertyViolation("scaled partial-clique indicator failed the vertex rank check");
        out.push_back(std::move(z));
    }
    return out;
}

}  // namespace cbsep
