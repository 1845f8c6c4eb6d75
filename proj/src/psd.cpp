#include "cbsep/psd.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "cbsep/errors.hpp"

namespace cbsep {

PMOneMatrix::PMOneMatrix(int n, std::vector<int> entries) : n_(n), a_(std::move(entries)) {
    if (n < 1) throw std::invalid_argument("matrix needs at least one row");
    if (a_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("entry count does not match dimension");
    for (int v : a_)
        if (v != 1 && v != -1) throw std::invalid_argument("entries must be exactly +1 or -1");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a_[i * n + j] != a_[j * n + i])
                throw std::invalid_argument("matrix must be symmetric");
}

PMOneMatrix PMOneMatrix::from_negative_graph(const Graph& negatives) {
    const int n = negatives.n();
    std::vector<int> entries(static_cast<std::size_t>(n) * n, 1);
    for (const auto& [u, v] : negatives.edges()) {
        entries[u * n + v] = -1;
        entries[v * n + u] = -1;
    }
    return PMOneMatrix(n, std::move(entries));
}

bool PMOneMatrix::diagonal_all_one() const {
    for (int i = 0; i < n_; ++i)
        if (a_[i * n_ + i] != 1) return false;
    return true;
}

Graph PMOneMatrix::negative_graph() const {
    std::vector<Edge> edges;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (a_[i * n_ + j] == -1) edges.emplace_back(i, j);
    return Graph(n_, std::move(edges));
}

SymMatrix PMOneMatrix::as_matrix() const {
    SymMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) m.set(i, j, static_cast<double>(a_[i * n_ + j]));
    return m;
}

bool is_psd_pm1(const PMOneMatrix& m) {
    if (!m.diagonal_all_one()) return false;
    return is_complete_bipartite(m.negative_graph()).has_value();
}

std::optional<std::vector<int>> sos_witness(const PMOneMatrix& m) {
    if (!m.diagonal_all_one()) return std::nullopt;
    const auto sides = is_complete_bipartite(m.negative_graph());
    if (!sides) return std::nullopt;
    std::vector<int> b(m.n(), 1);
    for (int v : sides->second) b[v] = -1;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (i != j && m(i, j) != b[i] * b[j])
                throw PropertyViolation("sign witness failed to reproduce the matrix");
    return b;
}

std::optional<BadTripleWitness> bad_triple_witness(const PMOneMatrix& m) {
    if (!m.diagonal_all_one())
        throw std::invalid_argument("bad-triple search requires a +1 diagonal");
    const int n = m.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const int aij = m(i, j), aik = m(i, k), ajk = m(j, k);
                const int negatives = (aij < 0) + (aik < 0) + (ajk < 0);
                if (negatives != 1 && negatives != 3) continue;
                BadTripleWitness w;
                w.triple = {i, j, k};
                w.x.assign(n, 0);
                w.x[i] = w.x[j] = w.x[k] = 1;
                if (negatives == 1) {
                    // Flip the vertex shared by the two +1 pairs (the one
                    // opposite the lone -1 entry).
                    if (aij == -1) w.x[k] = -1;
                    else if (aik == -1) w.x[j] = -1;
                    else w.x[i] = -1;
                }
                if (quadratic_form(m, w.x) != -3)
                    throw PropertyViolation("bad-triple witness does not evaluate to -3");
                return w;
            }
    return std::nullopt;
}

long quadratic_form(const PMOneMatrix& m, const std::vector<int>& x) {
    if (x.size() != static_cast<std::size_t>(m.n()))
        throw std::invalid_argument("vector length does not match matrix dimension");
    long total = 0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            total += static_cast<long>(m(i, j)) * x[i] * x[j];
    return total;
}

SymMatrix one_minus_z(const ZPoint& z) {
    SymMatrix m(z.n());
    for (int i = 0; i < z.n(); ++i)
        for (int j = i; j < z.n(); ++j) m.set(i, j, 1.0 - z(i, j));
    return m;
}

bool is_in_P(const ZPoint& z, double tol) {
    // Converge the eigensolver well below the membership slack so the
    // decision is dominated by tol, not by solver error.
    const double eig_tol = std::min(tol * 1e-2, 1e-10);
    return eig_min(one_minus_z(z), eig_tol) >= -tol;
}

std::vector<std::vector<double>> biclique_gram(const PartialClique& b, double lambda) {
    if (lambda < 0.0 || lambda > 2.0)
        throw std::invalid_argument("gram construction needs lambda in [0, 2]");
    const Graph d = b.derived_graph();
    const auto sides = is_complete_bipartite(d);
    if (!sides) throw std::invalid_argument("gram construction needs a biclique");
    // Two unit vectors in the plane with inner product 1 - lambda; vertices
    // on the same side share a vector, so same-side pairs get z = 0 and
    // crossing pairs get z = lambda.
    const double cosang = 1.0 - lambda;
    const double sinang = std::sqrt(std::max(0.0, 1.0 - cosang * cosang));
    std::vector<std::vector<double>> vectors(b.n(), {1.0, 0.0});
    for (int v : sides->second) vectors[v] = {cosang, sinang};
    for (int i = 0; i < b.n(); ++i)
        for (int j = i + 1; j < b.n(); ++j) {
            const double ip = vectors[i][0] * vectors[j][0] + vectors[i][1] * vectors[j][1];
            const double want = d.has_edge(i, j) ? 1.0 - lambda : 1.0;
            if (std::abs(ip - want) > 1e-12)
                throw PropertyViolation("gram vectors fail to reproduce the scaled indicator");
        }
    return vectors;
}

namespace {

SymMatrix ray_matrix(const Graph& derived, double lambda) {
    SymMatrix m(derived.n());
    for (int i = 0; i < derived.n(); ++i)
        for (int j = i; j < derived.n(); ++j)
            m.set(i, j, i == j ? 1.0 : (derived.has_edge(i, j) ? 1.0 - lambda : 1.0));
    return m;
}

}  // namespace

double partial_clique_psd_threshold(const PartialClique& b, double tol) {
    const Graph d = b.derived_graph();
    const double eig_tol = std::min(tol * 1e-2, 1e-10);
    auto feasible = [&](double lambda) {
        return eig_min(ray_matrix(d, lambda), eig_tol) >= -tol;
    };
    if (!feasible(0.0))
        throw PropertyViolation("ray origin (the all-ones matrix) must be PSD");
    if (feasible(2.0)) return 2.0;
    double lo = 0.0, hi = 2.0;
    for (int iter = 0; iter < 64; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    // Membership along the ray is an interval: {lambda : 1 - lambda A >= 0}
    // is the preimage of the convex PSD cone under an affine map.  Spot-check
    // that the sampled feasibility pattern really is a prefix.
    bool seen_infeasible = false;
    for (int s = 0; s <= 16; ++s) {
        const bool f = feasible(2.0 * s / 16.0);
        if (f && seen_infeasible)
            throw PropertyViolation("psd feasibility along the ray is not an interval");
        if (!f) seen_infeasible = true;
    }
    return lo;
}

bool cube_edge_in_P(const ZPoint& endpoint, int pair_idx, double tol) {
    if (pair_idx < 0 || pair_idx >= endpoint.dim())
        throw std::invalid_argument("coordinate index out of range");
    for (int k = 0; k < endpoint.dim(); ++k) {
        if (k == pair_idx) continue;
        const double v = endpoint.at_index(k);
        if (v != 0.0 && v != 2.0)
            throw std::invalid_argument("cube-edge point must have all fixed coordinates at 0 or 2");
    }
    bool results[3];
    const double samples[3] = {0.0, 1.0, 2.0};
    for (int s = 0; s < 3; ++s) {
        ZPoint p = endpoint;
        p.set_index(pair_idx, samples[s]);
        results[s] = is_in_P(p, tol);
    }
    if (results[0] != results[1] || results[1] != results[2]) {
        std::ostringstream msg;
        msg << "cube edge is neither fully inside nor fully outside the spectrahedron"
            << " (samples at 0/1/2: " << results[0] << "/" << results[1] << "/" << results[2] << ")";
        throw PropertyViolation(msg.str());
    }
    return results[0];
}

PMOneMatrix parse_pm1(std::istream& in) {
    int lineno = 1;
    long n = 0;
    if (!(in >> n) || n < 1) throw ParseError(lineno, "expected a positive dimension");
    std::vector<int> entries;
    entries.reserve(n * n);
    for (long i = 0; i < n; ++i) {
        ++lineno;
        for (long j = 0; j < n; ++j) {
            long v;
            if (!(in >> v)) throw ParseError(lineno, "expected " + std::to_string(n) + " entries in row " + std::to_string(i));
            if (v != 1 && v != -1) throw ParseError(lineno, "entries must be +1 or -1");
            entries.push_back(static_cast<int>(v));
        }
    }
    try {
        return PMOneMatrix(static_cast<int>(n), std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

PMOneMatrix parse_pm1_string(const std::string& text) {
    std::istringstream in(text);
    return parse_pm1(in);
}

std::string format_pm1(const PMOneMatrix& m) {
    std::ostringstream out;
    out << m.n() << "\n";
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) out << (j ? " " : "") << m(i, j);
        out << "\n";
    }
    return out.str();
}

}  // namespace cbsep
