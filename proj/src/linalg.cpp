#include "cbsep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cbsep {

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("matrix needs at least one row");
    a_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::all_ones(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, 1.0);
    return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows, double sym_tol) {
    const int n = static_cast<int>(rows.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (std::abs(rows[i][j] - rows[j][i]) > sym_tol)
                throw std::invalid_argument("matrix not symmetric within tolerance");
            m.set(i, j, 0.5 * (rows[i][j] + rows[j][i]));
        }
    return m;
}

double SymMatrix::max_abs() const {
    double best = 0.0;
    for (double v : a_) best = std::max(best, std::abs(v));
    return best;
}

EigenSystem jacobi_eigensystem(const SymMatrix& m, double tol, int max_sweeps) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const int n = m.n();
    // Work on a copy of the upper triangle via a full mutable matrix.
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

    const double scale = m.max_abs();
    const double threshold = tol * (1.0 + scale);

    auto off_max = [&]() {
        double best = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) best = std::max(best, std::abs(a[p * n + q]));
        return best;
    };

    bool converged = (n == 1) || off_max() < threshold;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                // Classic stable rotation: pick the smaller-angle root.
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e14) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = akp - s * (akq + tau * akp);
                    a[p * n + k] = a[k * n + p];
                    a[k * n + q] = akq + s * (akp - tau * akq);
                    a[q * n + k] = a[k * n + q];
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p];
                    const double vkq = v[k * n + q];
                    v[k * n + p] = vkp - s * (vkq + tau * vkp);
                    v[k * n + q] = vkq + s * (vkp - tau * vkq);
                }
            }
        }
        converged = off_max() < threshold;
    }
    if (!converged)
        throw std::runtime_error("jacobi eigensolver did not converge within the sweep budget");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a[x * n + x] < a[y * n + y]; });
    EigenSystem out;
    out.values.reserve(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int r = 0; r < n; ++r) {
        const int k = order[r];
        out.values.push_back(a[k * n + k]);
        for (int i = 0; i < n; ++i) out.vectors[r][i] = v[i * n + k];
    }
    return out;
}

double eig_min(const SymMatrix& m, double tol) {
    return jacobi_eigensystem(m, tol).values.front();
}

}  // namespace cbsep
