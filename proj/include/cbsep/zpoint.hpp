#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace cbsep {

/// Number of unordered vertex pairs, i.e. the ambient dimension d.
inline int pair_count(int n) { return n * (n - 1) / 2; }

/// Index of pair (i, j), i < j, in lexicographic pair order.
inline int pair_index(int n, int i, int j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// A symmetric pseudo-distance assignment z on vertex pairs: z_ii = 0,
/// 0 <= z_ij <= 2.  Stored as the strict upper triangle in lexicographic
/// pair order, which makes symmetry and the zero diagonal structural.
class ZPoint {
public:
    explicit ZPoint(int n);   // all-zero point

    /// Builds from a full n x n matrix, validating symmetry and the zero
    /// diagonal within `sym_tol` and the [0, 2] range within `range_tol`
    /// (tiny excursions are clamped).
    static ZPoint from_full(const std::vector<std::vector<double>>& rows,
                            double sym_tol = 1e-12, double range_tol = 1e-9);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(tri_.size()); }

    double operator()(int i, int j) const {
        if (i == j) return 0.0;
        return i < j ? tri_[pair_index(n_, i, j)] : tri_[pair_index(n_, j, i)];
    }
    /// Checked write: validates the pair and that value sits in [0, 2] up to
    /// 1e-9 of floating-point slack (then clamps).  set_index is the
    /// unchecked fast path.
    void set(int i, int j, double value);

    double at_index(int k) const { return tri_[k]; }
    void set_index(int k, double value) { tri_[k] = value; }
    const std::vector<double>& upper() const { return tri_; }

    /// Sum over unordered pairs (the balance functional).
    double sum() const;

    bool operator==(const ZPoint& other) const { return n_ == other.n_ && tri_ == other.tri_; }
    /// Lexicographic order on the upper-triangle vector; used for
    /// deterministic tie-breaking.
    bool operator<(const ZPoint& other) const;

private:
    int n_ = 0;
    std::vector<double> tri_;
};

/// Coordinatewise convex combination (1 - t) * a + t * b.
ZPoint lerp(const ZPoint& a, const ZPoint& b, double t);

/// Text format: first line "n", then n rows of n numbers.
ZPoint parse_zpoint(std::istream& in);
ZPoint parse_zpoint_string(const std::string& text);
std::string format_zpoint(const ZPoint& z);

}  // namespace cbsep
