#include "cbsep/relaxation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cbsep/errors.hpp"
#include "cbsep/psd.hpp"
#include "cbsep/rounding.hpp"

namespace cbsep {

ProgramInstance::ProgramInstance(Graph g_, double c_, double p_, double balance_scale_)
    : g(std::move(g_)), c(c_), p(p_), balance_scale(balance_scale_) {
    if (g.n() < 2) throw std::invalid_argument("program instance needs at least two vertices");
    ConstraintSystem(g.n(), c, p, balance_scale);  // range validation
}

std::vector<std::string> instance_warnings(const ProgramInstance& inst) {
    std::vector<std::string> out;
    const int n = inst.g.n();
    bool window_nonempty = false;
    for (int s = 1; s < n; ++s)
        if (s > inst.c * n && s < (1.0 - inst.c) * n) window_nonempty = true;
    if (!window_nonempty) {
        std::ostringstream msg;
        msg << "balance window c*n < |S| < (1-c)*n is empty for n = " << n << ", c = " << inst.c
            << "; the exact baseline is undefined";
        out.push_back(msg.str());
    }
    if (inst.c * n < 1.0) {
        std::ostringstream msg;
        msg << "c * n = " << inst.c * n << " < 1: the balance window admits singleton sides";
        out.push_back(msg.str());
    }
    return out;
}

double objective(const ZPoint& z, const Graph& g, double p) {
    if (z.n() != g.n()) throw std::invalid_argument("point and graph dimensions differ");
    if (!(p > 0.0 && p <= 2.0)) throw std::invalid_argument("exponent p must lie in (0, 2]");
    const double e = p / 2.0;
    double total = 0.0;
    for (const auto& [u, v] : g.edges())
        total += std::pow(std::max(z(u, v), 0.0) / 2.0, e);
    return total;
}

ZPoint cut_embedding(const VertexSet& side, int n) {
    if (side.empty() || static_cast<int>(side.size()) >= n)
        throw std::invalid_argument("cut side must be a proper nonempty subset");
    std::vector<char> in_side(n, 0);
    for (int v : side) {
        if (v < 0 || v >= n) throw std::invalid_argument("cut side vertex out of range");
        in_side[v] = 1;
    }
    ZPoint z(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (in_side[i] != in_side[j]) z.set(i, j, 2.0);
    return z;
}

ZPoint vectors_to_z(const std::vector<std::vector<double>>& vectors) {
    const int n = static_cast<int>(vectors.size());
    if (n < 1) throw std::invalid_argument("need at least one vector");
    const std::size_t dim = vectors.front().size();
    auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
        return s;
    };
    for (const auto& v : vectors) {
        if (v.size() != dim) throw std::invalid_argument("vectors must share a dimension");
        if (std::abs(dot(v, v) - 1.0) > 1e-9)
            throw std::invalid_argument("vectors must be unit length (within 1e-9)");
    }
    ZPoint z(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double zij = 1.0 - dot(vectors[i], vectors[j]);
            double dist2 = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double dk = vectors[i][k] - vectors[j][k];
                dist2 += dk * dk;
            }
            if (std::abs(dist2 - 2.0 * zij) > 1e-8)
                throw PropertyViolation("squared distance does not equal twice the z entry");
            z.set(i, j, std::clamp(zij, 0.0, 2.0));
        }
    return z;
}

double Hessian2::max_eigenvalue() const {
    const double mean = 0.5 * (fxx + fyy);
    return mean + std::hypot(0.5 * (fxx - fyy), fxy);
}

namespace {

void check_hessian_domain(double x, double y, double q) {
    if (!(q > 1.0)) throw std::invalid_argument("hessian defined for q > 1");
    if (!(x > 0.0 && y > 0.0)) throw std::invalid_argument("hessian defined for positive x, y");
}

double power_sum(double x, double y, double q) {
    return std::pow(x, 1.0 / q) + std::pow(y, 1.0 / q);
}

}  // namespace

Hessian2 hessian_closed_form(double x, double y, double q) {
    check_hessian_domain(x, y, q);
    const double xr = std::pow(x, 1.0 / q);
    const double yr = std::pow(y, 1.0 / q);
    const double k = (q - 1.0) / q * std::pow(xr + yr, q - 2.0);
    Hessian2 h;
    h.fxx = -k * yr * std::pow(x, (1.0 - 2.0 * q) / q);
    h.fyy = -k * xr * std::pow(y, (1.0 - 2.0 * q) / q);
    h.fxy = k * std::pow(x * y, (1.0 - q) / q);
    return h;
}

Hessian2 hessian_finite_diff(double x, double y, double q) {
    check_hessian_domain(x, y, q);
    const double hx = 1e-4 * std::max(1.0, x);
    const double hy = 1e-4 * std::max(1.0, y);
    if (x - hx <= 0.0 || y - hy <= 0.0)
        throw std::invalid_argument("finite-difference stencil leaves the positive quadrant");
    auto f = [q](double a, double b) { return std::pow(power_sum(a, b, q), q); };
    Hessian2 h;
    h.fxx = (f(x + hx, y) - 2.0 * f(x, y) + f(x - hx, y)) / (hx * hx);
    h.fyy = (f(x, y + hy) - 2.0 * f(x, y) + f(x, y - hy)) / (hy * hy);
    h.fxy = (f(x + hx, y + hy) - f(x + hx, y - hy) - f(x - hx, y + hy) + f(x - hx, y - hy)) /
            (4.0 * hx * hy);
    return h;
}

double hessian_quadratic_form(double x, double y, double q, double a, double b) {
    check_hessian_domain(x, y, q);
    const double k = (q - 1.0) / q * std::pow(power_sum(x, y, q), q - 2.0);
    const double lever = a * y - b * x;
    return -k * std::pow(x * y, (1.0 - 2.0 * q) / q) * lever * lever;
}

ConcavityReport concavity_certificate(double q, const std::vector<double>& grid) {
    ConcavityReport report;
    report.q = q;
    for (double x : grid)
        for (double y : grid) {
            HessianSample s;
            s.q = q;
            s.x = x;
            s.y = y;
            s.closed = hessian_closed_form(x, y, q);
            s.fd = hessian_finite_diff(x, y, q);
            auto rel = [](double exact, double approx) {
                return std::abs(exact - approx) / std::max(std::abs(exact), 1e-12);
            };
            s.rel_err = std::max({rel(s.closed.fxx, s.fd.fxx), rel(s.closed.fxy, s.fd.fxy),
                                  rel(s.closed.fyy, s.fd.fyy)});
            s.max_eig = s.closed.max_eigenvalue();
            report.worst_rel_err = std::max(report.worst_rel_err, s.rel_err);
            report.worst_max_eig = std::max(report.worst_max_eig, s.max_eig);
            report.samples.push_back(s);
        }
    return report;
}

bool in_power_region(double x, double y, double s, double p, double tol) {
    const double e = p / 2.0;
    return std::pow(x, e) + std::pow(y, e) >= std::pow(s, e) - tol;
}

long region_convexity_check(double p, long samples, std::uint64_t seed) {
    if (!(p > 0.0 && p < 2.0)) throw std::invalid_argument("convexity check covers 0 < p < 2");
    Rng rng(seed);
    auto draw_member = [&]() {
        while (true) {
            const double x = 2.0 * rng.uniform();
            const double y = 2.0 * rng.uniform();
            const double s = 2.0 * rng.uniform();
            if (in_power_region(x, y, s, p)) return std::array<double, 3>{x, y, s};
        }
    };
    long violations = 0;
    for (long i = 0; i < samples; ++i) {
        const auto a = draw_member();
        const auto b = draw_member();
        const double mx = 0.5 * (a[0] + b[0]);
        const double my = 0.5 * (a[1] + b[1]);
        const double ms = 0.5 * (a[2] + b[2]);
        if (!in_power_region(mx, my, ms, p, 1e-12)) ++violations;
    }
    return violations;
}

bool psd_segment_check(const ZPoint& z1, const ZPoint& z2, int samples) {
    if (samples < 2) throw std::invalid_argument("segment check needs at least two samples");
    if (!is_in_P(z1) || !is_in_P(z2))
        throw std::invalid_argument("segment endpoints must lie in the spectrahedron");
    for (int s = 0; s < samples; ++s) {
        const double t = static_cast<double>(s) / (samples - 1);
        if (!is_in_P(lerp(z1, z2, t))) return false;
    }
    return true;
}

}  // namespace cbsep
