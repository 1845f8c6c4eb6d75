#pragma once

#include <vector>

namespace cbsep {

/// Dense symmetric matrix; both triangles are kept in sync through set().
class SymMatrix {
public:
    explicit SymMatrix(int n);
    static SymMatrix identity(int n);
    static SymMatrix all_ones(int n);
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows,
                               double sym_tol = 1e-12);

    int n() const { return n_; }
    double operator()(int i, int j) const { return a_[i * n_ + j]; }
    void set(int i, int j, double value) {
        a_[i * n_ + j] = value;
        a_[j * n_ + i] = value;
    }
    double max_abs() const;

private:
    int n_ = 0;
    std::vector<double> a_;
};

struct EigenSystem {
    std::vector<double> values;                // ascending
    std::vector<std::vector<double>> vectors;  // vectors[k] is a unit eigenvector for values[k]
};

/// Full eigendecomposition by cyclic Jacobi rotations.  Sweeps until every
/// off-diagonal magnitude drops below tol * (1 + max |a_ij|), which bounds
/// the eigenvalue error by n * tol * (1 + max |a_ij|) via Gershgorin discs.
/// Throws std::runtime_error if the sweep budget is exhausted first.
EigenSystem jacobi_eigensystem(const SymMatrix& m, double tol, int max_sweeps = 64);

/// Smallest eigenvalue, same convergence contract.
double eig_min(const SymMatrix& m, double tol);

}  // namespace cbsep
