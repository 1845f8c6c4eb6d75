#include "cbsep/rounding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cbsep/errors.hpp"
#include "cbsep/linalg.hpp"

namespace cbsep {

double Rng::uniform() {
    // 53 uniform bits, the usual shift construction.
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_pos() { return 1.0 - uniform(); }

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial) {
    std::uint64_t x = master_seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

std::vector<std::vector<double>> gram_vectors(const ZPoint& z, double tol) {
    const int n = z.n();
    const double eig_tol = std::min(tol * 1e-2, 1e-10);
    const EigenSystem es = jacobi_eigensystem(one_minus_z(z), eig_tol);
    for (double v : es.values)
        if (v < -tol)
            throw std::invalid_argument("point is not in the spectrahedron (eigenvalue " +
                                        std::to_string(v) + ")");
    std::vector<std::vector<double>> vectors(n, std::vector<double>(n, 0.0));
    for (int k = 0; k < n; ++k) {
        const double scale = std::sqrt(std::max(es.values[k], 0.0));
        for (int i = 0; i < n; ++i) vectors[i][k] = scale * es.vectors[k][i];
    }
    // Diagonal of 1 - Z is exactly one, so row norms are already within
    // solver error of one; renormalize to make them exactly unit.
    for (auto& row : vectors) {
        double norm2 = 0.0;
        for (double v : row) norm2 += v * v;
        const double norm = std::sqrt(norm2);
        if (norm < 0.5) throw PropertyViolation("gram row norm collapsed; expected about 1");
        for (double& v : row) v /= norm;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double ip = 0.0;
            for (int k = 0; k < n; ++k) ip += vectors[i][k] * vectors[j][k];
            if (std::abs(ip - (1.0 - z(i, j))) > n * tol)
                throw PropertyViolation("gram vectors fail to reproduce 1 - z");
        }
    return vectors;
}

VertexSet hyperplane_cut(const std::vector<std::vector<double>>& vectors, Rng& rng) {
    if (vectors.empty()) throw std::invalid_argument("need at least one vector");
    const std::size_t dim = vectors.front().size();
    std::vector<double> g(dim);
    for (double& v : g) v = rng.normal();
    VertexSet side;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        double ip = 0.0;
        for (std::size_t k = 0; k < dim; ++k) ip += g[k] * vectors[i][k];
        if (ip >= 0.0) side.push_back(static_cast<int>(i));
    }
    return side;
}

bool cut_preferred(const CutResult& a, const CutResult& b, double c) {
    const bool a_bal = a.balance >= c;
    const bool b_bal = b.balance >= c;
    if (a_bal != b_bal) return a_bal;
    if (a.cut_size != b.cut_size) return a.cut_size < b.cut_size;
    return a.balance > b.balance;
}

CutResult round(const ZPoint& z, const Graph& g, double c, int trials, std::uint64_t seed) {
    if (z.n() != g.n()) throw std::invalid_argument("point and graph dimensions differ");
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    const auto vectors = gram_vectors(z);
    CutResult best;
    bool have_best = false;
    int balanced = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, t));
        CutResult cur;
        cur.side = hyperplane_cut(vectors, rng);
        std::vector<char> in_side(g.n(), 0);
        for (int v : cur.side) in_side[v] = 1;
        for (const auto& [u, v] : g.edges())
            if (in_side[u] != in_side[v]) ++cur.cut_size;
        const int s = static_cast<int>(cur.side.size());
        cur.balance = static_cast<double>(std::min(s, g.n() - s)) / g.n();
        if (cur.balance >= c) ++balanced;
        if (!have_best || cut_preferred(cur, best, c)) {
            best = cur;
            have_best = true;
        }
    }
    best.trials_used = trials;
    best.balanced_trials = balanced;
    best.seed = seed;
    return best;
}

}  // namespace cbsep
