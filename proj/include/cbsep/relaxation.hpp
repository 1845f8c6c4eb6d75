#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cbsep/graph.hpp"
#include "cbsep/polytope.hpp"
#include "cbsep/zpoint.hpp"

namespace cbsep {

/// One instance of the relaxed separator program.
struct ProgramInstance {
    Graph g;
    double c;
    double p;
    double balance_scale = 1.0;

    ProgramInstance(Graph g_, double c_, double p_, double balance_scale_ = 1.0);
    ConstraintSystem system() const { return ConstraintSystem(g.n(), c, p, balance_scale); }
};

/// Non-fatal observations about an instance (empty balance window, window
/// admitting singleton sides).
std::vector<std::string> instance_warnings(const ProgramInstance& inst);

/// 2^(-p/2) * sum over edges of z^(p/2), evaluated as sum of (z/2)^(p/2) so
/// that cut embeddings (z = 2 across the cut) score exactly the cut size.
double objective(const ZPoint& z, const Graph& g, double p);

/// z = 2 on pairs crossing (side, complement), 0 elsewhere.  The side must
/// be a proper nonempty subset.
ZPoint cut_embedding(const VertexSet& side, int n);

/// z_ij = 1 - <v_i, v_j> from unit vectors (checked to 1e-9); the identity
/// |v_i - v_j|^2 = 2 z_ij is re-verified to 1e-8.
ZPoint vectors_to_z(const std::vector<std::vector<double>>& vectors);

/// Second derivatives of f(x, y) = (x^(1/q) + y^(1/q))^q for q > 1, x,y > 0.
struct Hessian2 {
    double fxx, fxy, fyy;
    double max_eigenvalue() const;
};

Hessian2 hessian_closed_form(double x, double y, double q);

/// Central differences with step 1e-4 * max(1, coordinate).
Hessian2 hessian_finite_diff(double x, double y, double q);

/// The quadratic form a^2 fxx + 2ab fxy + b^2 fyy in factored form
/// -K (xy)^((1-2q)/q) (a y - b x)^2; exactly zero along (a, b) ~ (x, y).
double hessian_quadratic_form(double x, double y, double q, double a, double b);

struct HessianSample {
    double q, x, y;
    Hessian2 closed;
    Hessian2 fd;
    double rel_err;    // worst of the three entries vs finite differences
    double max_eig;    // largest eigenvalue of the closed form
};

struct ConcavityReport {
    double q;
    std::vector<HessianSample> samples;
    double worst_rel_err = 0.0;
    double worst_max_eig = -1e300;
    bool concave(double eig_tol) const { return worst_max_eig <= eig_tol; }
    bool matches_finite_diff(double rel_tol) const { return worst_rel_err <= rel_tol; }
};

/// Certifies concavity of f on grid x grid: closed-form Hessians are
/// compared against finite differences and their largest eigenvalues
/// collected.  Requires q > 1 and positive grid values.
ConcavityReport concavity_certificate(double q, const std::vector<double>& grid);

/// True when (x, y, s) lies in {x^(p/2) + y^(p/2) >= s^(p/2)} over [0,2]^3.
bool in_power_region(double x, double y, double s, double p, double tol = 0.0);

/// Samples `samples` pairs of points of the power region uniformly (by
/// rejection from the cube) and counts midpoints that leave the region by
/// more than 1e-12.  Returns the violation count (0 certifies convexity on
/// the sample).
long region_convexity_check(double p, long samples, std::uint64_t seed);

/// Checks spectrahedron membership along the segment [z1, z2] at `samples`
/// evenly spaced parameters (both endpoints must already be members).
bool psd_segment_check(const ZPoint& z1, const ZPoint& z2, int samples);

}  // namespace cbsep
