#include "cbsep/zpoint.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "cbsep/errors.hpp"

namespace cbsep {

ZPoint::ZPoint(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("z-point needs at least one vertex");
    tri_.assign(pair_count(n), 0.0);
}

ZPoint ZPoint::from_full(const std::vector<std::vector<double>>& rows,
                         double sym_tol, double range_tol) {
    const int n = static_cast<int>(rows.size());
    ZPoint z(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("z matrix must be square");
        if (std::abs(rows[i][i]) > sym_tol)
            throw std::invalid_argument("z diagonal must be zero");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(rows[i][j] - rows[j][i]) > sym_tol)
                throw std::invalid_argument("z matrix must be symmetric");
            const double v = 0.5 * (rows[i][j] + rows[j][i]);
            if (v < -range_tol || v > 2.0 + range_tol)
                throw std::invalid_argument("z entry outside [0, 2]");
            z.set(i, j, std::clamp(v, 0.0, 2.0));
        }
    return z;
}

void ZPoint::set(int i, int j, double value) {
    if (i == j) throw std::invalid_argument("diagonal of a z-point is fixed at zero");
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_) throw std::invalid_argument("z-point pair out of range");
    if (value < -1e-9 || value > 2.0 + 1e-9)
        throw std::invalid_argument("z value outside [0, 2]");
    tri_[pair_index(n_, i, j)] = std::clamp(value, 0.0, 2.0);
}

double ZPoint::sum() const {
    double s = 0.0;
    for (double v : tri_) s += v;
    return s;
}

bool ZPoint::operator<(const ZPoint& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    return std::lexicographical_compare(tri_.begin(), tri_.end(),
                                        other.tri_.begin(), other.tri_.end());
}

ZPoint lerp(const ZPoint& a, const ZPoint& b, double t) {
    if (a.n() != b.n()) throw std::invalid_argument("z-point dimensions differ");
    ZPoint out(a.n());
    for (int k = 0; k < a.dim(); ++k)
        out.set_index(k, (1.0 - t) * a.at_index(k) + t * b.at_index(k));
    return out;
}

ZPoint parse_zpoint(std::istream& in) {
    int lineno = 1;
    long n = 0;
    if (!(in >> n) || n < 1) throw ParseError(lineno, "expected a positive vertex count");
    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (long i = 0; i < n; ++i) {
        ++lineno;
        for (long j = 0; j < n; ++j)
            if (!(in >> rows[i][j]))
                throw ParseError(lineno, "expected " + std::to_string(n) + " numbers in row " + std::to_string(i));
    }
    try {
        return ZPoint::from_full(rows);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

ZPoint parse_zpoint_string(const std::string& text) {
    std::istringstream in(text);
    return parse_zpoint(in);
}

std::string format_zpoint(const ZPoint& z) {
    std::ostringstream out;
    out.precision(17);
    out << z.n() << "\n";
    for (int i = 0; i < z.n(); ++i) {
        for (int j = 0; j < z.n(); ++j) out << (j ? " " : "") << z(i, j);
        out << "\n";
    }
    return out.str();
}

}  // namespace cbsep
