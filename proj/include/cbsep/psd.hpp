#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cbsep/graph.hpp"
#include "cbsep/linalg.hpp"
#include "cbsep/partial_clique.hpp"
#include "cbsep/zpoint.hpp"

namespace cbsep {

/// Default slack when deciding positive semidefiniteness numerically.
inline constexpr double kPsdTol = 1e-8;

/// Symmetric matrix with every entry +1 or -1.  Construction permits a -1
/// diagonal entry; recognition treats such matrices as never PSD (they are
/// not, since e_i' A e_i = -1).
class PMOneMatrix {
public:
    PMOneMatrix(int n, std::vector<int> entries);   // row-major, validated

    /// Entries are -1 exactly on the edges of `negatives`; +1 elsewhere,
    /// including the diagonal.
    static PMOneMatrix from_negative_graph(const Graph& negatives);

    int n() const { return n_; }
    int operator()(int i, int j) const { return a_[i * n_ + j]; }
    bool diagonal_all_one() const;

    /// Graph on the -1 off-diagonal positions.
    Graph negative_graph() const;

    SymMatrix as_matrix() const;

private:
    int n_ = 0;
    std::vector<int> a_;
};

/// Combinatorial PSD test: a ±1 symmetric matrix with +1 diagonal is PSD
/// exactly when its -1 pattern is a spanning complete bipartite graph (one
/// side may be empty).
bool is_psd_pm1(const PMOneMatrix& m);

/// Sign vector b with a_ij = b_i * b_j for all pairs, so A = b b' and the
/// matrix is a perfect square.  Exists exactly when is_psd_pm1 holds.
std::optional<std::vector<int>> sos_witness(const PMOneMatrix& m);

struct BadTripleWitness {
    std::array<int, 3> triple;   // i < j < k
    std::vector<int> x;          // supported on the triple, x' A x = -3
};

/// Negative-certificate search over vertex triples.  A triple is bad when
/// its three off-diagonal entries are either all -1, or two +1 and one -1;
/// the witness vector places -1 at the shared endpoint of the two +1 pairs
/// (all-(-1) case: all ones).  Requires a +1 diagonal.  Returns the first
/// bad triple in lexicographic order; none exists iff is_psd_pm1.
std::optional<BadTripleWitness> bad_triple_witness(const PMOneMatrix& m);

/// x' A x evaluated in integer arithmetic.
long quadratic_form(const PMOneMatrix& m, const std::vector<int>& x);

/// Membership in the spectrahedron: the all-ones matrix minus Z is PSD up
/// to -tol on the smallest eigenvalue.
bool is_in_P(const ZPoint& z, double tol = kPsdTol);

/// 1 - Z as a dense symmetric matrix.
SymMatrix one_minus_z(const ZPoint& z);

/// Unit Gram vectors (2-dimensional) realizing the point lambda * indicator
/// of a biclique: one vector per side, pairwise inner product 1 - lambda.
/// Throws std::invalid_argument when b is not a biclique or lambda is
/// outside [0, 2].  Reproduces 1 - Z entrywise to 1e-12.
std::vector<std::vector<double>> biclique_gram(const PartialClique& b, double lambda);

/// Largest lambda in [0, 2] with eig_min(1 - lambda * A) >= -tol, where A is
/// the adjacency matrix of b's derived graph.  Found by bisection (64
/// halvings); the feasible set is an interval containing 0 because the PSD
/// cone is convex along the ray, and that prefix property is re-validated by
/// sampling.
double partial_clique_psd_threshold(const PartialClique& b, double tol = kPsdTol);

/// Samples spectrahedron membership along a cube edge: the given point with
/// coordinate `pair_idx` replaced by 0, 1 and 2.  All other coordinates must
/// be exactly 0 or 2.  Returns the common answer; throws PropertyViolation
/// when the three samples disagree, which does happen on some edges — the
/// all-or-nothing behaviour is a tested claim, not an assumption.
bool cube_edge_in_P(const ZPoint& endpoint, int pair_idx, double tol = kPsdTol);

/// Text format: first line "n", then n rows of n entries, each +1 or -1.
PMOneMatrix parse_pm1(std::istream& in);
PMOneMatrix parse_pm1_string(const std::string& text);
std::string format_pm1(const PMOneMatrix& m);

}  // namespace cbsep
