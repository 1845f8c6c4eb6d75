#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cbsep/relaxation.hpp"

using namespace cbsep;

TEST_CASE("instance validation and warnings") {
    CHECK_NOTHROW(ProgramInstance(Graph::complete(4), 0.3, 1.0));
    CHECK_THROWS_AS(ProgramInstance(Graph::complete(4), 0.6, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(ProgramInstance(Graph::complete(4), 0.3, 3.0),
                    std::invalid_argument);

    // c = 0.5 on odd n leaves no integer side size strictly inside (cn, (1-c)n)
    const auto empty_warn =
        instance_warnings(ProgramInstance(Graph::complete(5), 0.5, 1.0));
    REQUIRE_FALSE(empty_warn.empty());
    CHECK(empty_warn[0].find("window") != std::string::npos);

    CHECK(instance_warnings(ProgramInstance(Graph::complete(4), 0.3, 1.0)).empty());
}

TEST_CASE("objective scores cut embeddings as exact cut sizes") {
    const Graph k4 = Graph::complete(4);
    for (double p : {0.5, 1.0, 1.5, 2.0}) {
        CHECK(objective(cut_embedding({0, 1}, 4), k4, p) == doctest::Approx(4.0).epsilon(1e-12));
        CHECK(objective(cut_embedding({0}, 4), k4, p) == doctest::Approx(3.0).epsilon(1e-12));
    }

    const Graph bridge(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}});
    CHECK(objective(cut_embedding({0, 1, 2}, 6), bridge, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(objective(ZPoint(4), k4, 1.0) == 0.0);
    CHECK(objective(cut_embedding({0, 1}, 4), Graph::empty(4), 1.0) == 0.0);

    // fractional point: each loaded edge contributes (z/2)^(p/2)
    ZPoint z(3);
    z.set(0, 1, 1.12);
    CHECK(objective(z, Graph::complete(3), 1.0) ==
          doctest::Approx(std::sqrt(0.56)).epsilon(1e-12));
    CHECK(objective(z, Graph::complete(3), 0.5) ==
          doctest::Approx(std::pow(0.56, 0.25)).epsilon(1e-12));
}

TEST_CASE("cut embeddings") {
    const ZPoint z = cut_embedding({0, 2}, 4);
    CHECK(z(0, 2) == 0.0);
    CHECK(z(1, 3) == 0.0);
    CHECK(z(0, 1) == 2.0);
    CHECK(z(0, 3) == 2.0);
    CHECK(z(1, 2) == 2.0);
    CHECK(z(2, 3) == 2.0);

    CHECK_THROWS_AS(cut_embedding({}, 4), std::invalid_argument);
    CHECK_THROWS_AS(cut_embedding({0, 1, 2, 3}, 4), std::invalid_argument);
    CHECK_THROWS_AS(cut_embedding({4}, 4), std::invalid_argument);
}

TEST_CASE("vectors to z") {
    // orthonormal vectors: every pair sits at z = 1
    const std::vector<std::vector<double>> ortho{
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const ZPoint z = vectors_to_z(ortho);
    CHECK(z(0, 1) == doctest::Approx(1.0));
    CHECK(z(1, 2) == doctest::Approx(1.0));

    const std::vector<std::vector<double>> anti{{1, 0}, {-1, 0}, {1, 0}};
    const ZPoint za = vectors_to_z(anti);
    CHECK(za(0, 1) == doctest::Approx(2.0));
    CHECK(za(0, 2) == doctest::Approx(0.0));

    CHECK_THROWS_AS(vectors_to_z({{0.5, 0}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(vectors_to_z({{1, 0}, {0}}), std::invalid_argument);
}

TEST_CASE("closed-form Hessian against finite differences") {
    // reference point x = y = 1, q = 2: f = (sqrt x + sqrt y)^2,
    // fxx = fyy = -1/2, fxy = +1/2
    const Hessian2 h = hessian_closed_form(1.0, 1.0, 2.0);
    CHECK(h.fxx == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(h.fyy == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(h.fxy == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(h.max_eigenvalue() == doctest::Approx(0.0).epsilon(1e-12));

    for (double q : {1.01, 1.5, 2.0, 3.0, 4.0})
        for (double x : {0.25, 1.0, 2.0})
            for (double y : {0.5, 1.0, 1.7}) {
                const Hessian2 cf = hessian_closed_form(x, y, q);
                const Hessian2 fd = hessian_finite_diff(x, y, q);
                CHECK(cf.fxx == doctest::Approx(fd.fxx).epsilon(1e-4));
                CHECK(cf.fxy == doctest::Approx(fd.fxy).epsilon(1e-4));
                CHECK(cf.fyy == doctest::Approx(fd.fyy).epsilon(1e-4));
                CHECK(cf.max_eigenvalue() <= 1e-9);
                // symmetry in the arguments
                const Hessian2 sw = hessian_closed_form(y, x, q);
                CHECK(cf.fxx == doctest::Approx(sw.fyy).epsilon(1e-12));
                CHECK(cf.fxy == doctest::Approx(sw.fxy).epsilon(1e-12));
            }

    CHECK_THROWS_AS(hessian_closed_form(1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(hessian_closed_form(0.0, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("factored quadratic form") {
    // vanishes exactly along the radial direction (a, b) = (x, y)
    CHECK(hessian_quadratic_form(0.7, 1.3, 2.5, 0.7, 1.3) == 0.0);
    CHECK(hessian_quadratic_form(1.0, 2.0, 3.0, 2.0, 4.0) == 0.0);

    for (double q : {1.5, 2.0, 4.0}) {
        const double x = 0.8, y = 1.4;
        const Hessian2 h = hessian_closed_form(x, y, q);
        for (double a : {-1.0, 0.3, 2.0})
            for (double b : {-0.5, 1.0}) {
                const double direct = a * a * h.fxx + 2 * a * b * h.fxy + b * b * h.fyy;
                CHECK(hessian_quadratic_form(x, y, q, a, b) ==
                      doctest::Approx(direct).epsilon(1e-9));
                CHECK(hessian_quadratic_form(x, y, q, a, b) <= 0.0);
            }
    }
}

TEST_CASE("concavity certificate") {
    const std::vector<double> grid{0.25, 0.5, 1.0, 2.0};
    for (double q : {1.01, 1.5, 2.0, 4.0}) {
        const ConcavityReport rep = concavity_certificate(q, grid);
        CHECK(rep.q == q);
        CHECK(rep.samples.size() == grid.size() * grid.size());
        CHECK(rep.matches_finite_diff(1e-4));
        CHECK(rep.concave(1e-9));
    }
    CHECK_THROWS_AS(concavity_certificate(1.0, grid), std::invalid_argument);
    CHECK_THROWS_AS(concavity_certificate(2.0, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("power region and its convexity") {
    CHECK(in_power_region(1.0, 1.0, 1.5, 1.0));
    CHECK_FALSE(in_power_region(0.1, 0.1, 2.0, 1.0));
    CHECK(in_power_region(0.0, 2.0, 2.0, 1.0));
    CHECK_FALSE(in_power_region(0.0, 1.0, 1.5, 1.0));

    for (double p : {0.5, 1.0, 1.5})
        CHECK(region_convexity_check(p, 20000, 42) == 0);
}

TEST_CASE("segment membership in the spectrahedron") {
    const ZPoint a = cut_embedding({0, 1}, 4);
    const ZPoint b = cut_embedding({0, 2}, 4);
    CHECK(psd_segment_check(a, b, 11));
    CHECK(psd_segment_check(a, a, 5));

    ZPoint bad(4);
    bad.set(0, 1, 2.0);
    bad.set(0, 2, 2.0);
    bad.set(1, 2, 2.0);
    CHECK_THROWS_AS(psd_segment_check(a, bad, 5), std::invalid_argument);
    CHECK_THROWS_AS(psd_segment_check(a, ZPoint(3), 5), std::invalid_argument);
}
