#pragma once

#include <vector>

#include "cbsep/partial_clique.hpp"
#include "cbsep/psd.hpp"
#include "cbsep/zpoint.hpp"

namespace cbsep {

/// Parameters of the feasible region: balance fraction c, curvature
/// exponent p, and the balance right-hand side scale (1 is the standard
/// form c(1-c)n^2; 2 selects the stronger 2c(1-c)n^2 variant).
struct ConstraintSystem {
    int n;
    double c;
    double p;
    double balance_scale = 1.0;

    ConstraintSystem(int n_, double c_, double p_, double balance_scale_ = 1.0);
    double balance_bound() const { return balance_scale * c * (1.0 - c) * n * n; }
};

/// z_ik^(p/2) <= z_ij^(p/2) + z_jk^(p/2) + tol for all ordered triples.
bool satisfies_triangle(const ZPoint& z, double p, double tol = 1e-9);

/// Sum over pairs meets the balance bound (exact comparison).
bool satisfies_balance(const ZPoint& z, const ConstraintSystem& sys);

struct MembershipFlags {
    bool in_T;   // triangle inequalities at exponent p/2
    bool in_H;   // balance half-space
    bool in_P;   // spectrahedron
    bool in_F;   // all three
};

/// Evaluates all region memberships with slack `tol`.  At p = 1 the
/// spectrahedron is contained in the triangle region; that containment is
/// re-checked here and a violation throws PropertyViolation.
MembershipFlags membership(const ZPoint& z, const ConstraintSystem& sys, double tol = kPsdTol);

/// lambda on the derived edges of b, zero elsewhere.  Needs lambda in [0, 2].
ZPoint scaled_indicator(const PartialClique& b, double lambda);

/// Point on the segment between the scale-2 indicators of u and v:
/// coordinatewise lambda * 2*indicator(u) + (1 - lambda) * 2*indicator(v),
/// so edges only in u carry 2*lambda, edges only in v carry 2*(1-lambda),
/// shared edges carry 2 and the rest 0.  Affine in lambda by construction.
ZPoint blend(const PartialClique& u, const PartialClique& v, double lambda);

/// True when the segment between the scale-2 indicators of u and v is an
/// edge (1-dimensional face) of the polytope R.  Decided combinatorially:
/// the constraints tight along the segment link its moving pairs, and the
/// segment is an edge exactly when those links form one connected component.
/// For n = 3 this coincides with "both one-sided weight classes are
/// bicliques"; from n = 4 on that simpler test is wrong in both directions
/// (two disjoint moving pairs span a square face; a matching-plus-edge
/// linkage is a genuine edge).  Requires u != v.
bool is_edge_of_R(const PartialClique& u, const PartialClique& v);

/// Rank of the active-constraint normals at z among the linear description
/// of R: cube facets 0 <= z_e <= 2 and triangle facets z_ik - z_ij - z_jk
/// <= 0.  A constraint is active when its slack is within `tol` of zero;
/// a violation beyond tol throws std::invalid_argument.  Rank d certifies a
/// vertex, d - 1 an edge direction.
int polytope_face_rank(const ZPoint& z, double tol = 1e-9);

/// The 0/2 vertices of R: the scale-2 partial-clique indicators, each
/// re-certified through the rank oracle.  (R also has fractional vertices
/// from n = 4 on; this list is the cube-point family.)
std::vector<ZPoint> vertices_of_R(int n, int limit = kDefaultEnumerationLimit);

}  // namespace cbsep
