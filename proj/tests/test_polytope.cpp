#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cbsep/errors.hpp"
#include "cbsep/polytope.hpp"
#include "cbsep/relaxation.hpp"

using namespace cbsep;

namespace {

ZPoint point3(double a, double b, double c) {
    ZPoint z(3);
    z.set(0, 1, a);
    z.set(0, 2, b);
    z.set(1, 2, c);
    return z;
}

}  // namespace

TEST_CASE("constraint system validation and bound") {
    const ConstraintSystem sys(4, 0.3, 1.0);
    CHECK(sys.balance_bound() == doctest::Approx(3.36));
    CHECK(ConstraintSystem(4, 0.3, 1.0, 2.0).balance_bound() == doctest::Approx(6.72));
    CHECK_NOTHROW(ConstraintSystem(3, 0.5, 2.0));

    CHECK_THROWS_AS(ConstraintSystem(4, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSystem(4, 0.55, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSystem(4, 0.3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSystem(4, 0.3, 2.1), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSystem(4, 0.3, 1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSystem(0, 0.3, 1.0), std::invalid_argument);
}

TEST_CASE("triangle region at several exponents") {
    const ZPoint cut = cut_embedding({0, 1}, 4);
    CHECK(satisfies_triangle(cut, 2.0));
    CHECK(satisfies_triangle(cut, 1.0));
    CHECK(satisfies_triangle(cut, 0.5));

    const ZPoint spike = point3(2.0, 0.0, 0.0);
    CHECK_FALSE(satisfies_triangle(spike, 2.0));
    CHECK_FALSE(satisfies_triangle(spike, 1.0));

    // sqrt(2) = sqrt(0.5) + sqrt(0.5): on the boundary at p = 1, inside at
    // smaller p, outside at p = 2
    const ZPoint boundary = point3(2.0, 0.5, 0.5);
    CHECK_FALSE(satisfies_triangle(boundary, 2.0));
    CHECK(satisfies_triangle(boundary, 1.0));
    CHECK(satisfies_triangle(boundary, 0.5));
}

TEST_CASE("balance half-space") {
    const ConstraintSystem sys(4, 0.3, 1.0);
    CHECK(satisfies_balance(cut_embedding({0, 1}, 4), sys));   // sum 8 >= 3.36
    CHECK_FALSE(satisfies_balance(ZPoint(4), sys));
    const ConstraintSystem tight(4, 0.5, 1.0);                 // bound 4
    CHECK(satisfies_balance(cut_embedding({0}, 4), tight));    // sum 6
}

TEST_CASE("membership flags") {
    const ConstraintSystem sys(4, 0.3, 1.0);
    const auto cut = membership(cut_embedding({0, 1}, 4), sys);
    CHECK(cut.in_T);
    CHECK(cut.in_H);
    CHECK(cut.in_P);
    CHECK(cut.in_F);

    const auto zero = membership(ZPoint(4), sys);
    CHECK(zero.in_T);
    CHECK_FALSE(zero.in_H);
    CHECK(zero.in_P);
    CHECK_FALSE(zero.in_F);

    const auto corner = membership(point3(2, 2, 2), ConstraintSystem(3, 0.3, 1.0));
    CHECK_FALSE(corner.in_P);
    CHECK_FALSE(corner.in_F);

    // p = 1 containment of the spectrahedron in the triangle region is
    // re-verified internally; sweeping indicators must never trip it
    const ConstraintSystem unit(4, 0.3, 1.0);
    for_each_partial_clique(4, [&](const PartialClique& b) {
        for (double lam : {0.3, 1.0, 1.7, 2.0})
            CHECK_NOTHROW(membership(scaled_indicator(b, lam), unit));
    });
}

TEST_CASE("scaled indicators") {
    const ZPoint z = scaled_indicator(PartialClique(3, {{0, 1}}), 1.2);
    CHECK(z(0, 1) == 0.0);
    CHECK(z(0, 2) == 1.2);
    CHECK(z(1, 2) == 1.2);
    CHECK(scaled_indicator(PartialClique(3, {}), 0.0) == ZPoint(3));
    CHECK_THROWS_AS(scaled_indicator(PartialClique(3, {}), 2.5), std::invalid_argument);
}

TEST_CASE("blend endpoints and weight classes") {
    const PartialClique u(3, {{0, 1, 2}});  // edgeless derived graph
    const PartialClique v(3, {{0, 1}});     // derived edges {0-2, 1-2}
    CHECK(blend(u, v, 1.0) == scaled_indicator(u, 2.0));
    CHECK(blend(u, v, 0.0) == scaled_indicator(v, 2.0));
    CHECK(blend(u, v, 0.5) == point3(0.0, 1.0, 1.0));

    const PartialClique a(4, {{0, 1}});
    const PartialClique b(4, {{2, 3}});
    const ZPoint m = blend(a, b, 0.25);
    CHECK(m(2, 3) == doctest::Approx(0.5));   // only in a: 2 * lambda
    CHECK(m(0, 1) == doctest::Approx(1.5));   // only in b: 2 * (1 - lambda)
    CHECK(m(0, 2) == doctest::Approx(2.0));   // shared edge
}

TEST_CASE("edges of the polytope") {
    const PartialClique pair01(3, {{0, 1}});
    const PartialClique pair02(3, {{0, 2}});
    const PartialClique all3(3, {{0, 1, 2}});
    const PartialClique none3(3, {});

    CHECK(is_edge_of_R(pair01, all3));
    CHECK(is_edge_of_R(pair01, pair02));
    CHECK_FALSE(is_edge_of_R(none3, all3));  // weight class is a triangle
    CHECK_THROWS_AS(is_edge_of_R(pair01, pair01), std::invalid_argument);

    // The n = 4 cases where "both weight classes are bicliques" gets the
    // answer wrong in either direction.  Two vertex-disjoint moving pairs
    // span a square 2-face, so the diagonal is not an edge; a single pair
    // against a perfect matching is linked through the shared weight-2 edges
    // and is a genuine edge.
    const PartialClique p01(4, {{0, 1}});
    const PartialClique p23(4, {{2, 3}});
    const PartialClique match(4, {{0, 2}, {1, 3}});
    CHECK_FALSE(is_edge_of_R(p01, p23));
    CHECK(polytope_face_rank(blend(p01, p23, 0.5)) == 4);
    CHECK(is_edge_of_R(p01, match));
    CHECK(polytope_face_rank(blend(p01, match, 0.5)) == 5);

    // cross-validate against the rank oracle on all pairs for n = 3 and 4
    for (int n = 3; n <= 4; ++n) {
        const auto families = enumerate_partial_cliques(n);
        const int d = pair_count(n);
        for (std::size_t x = 0; x < families.size(); ++x)
            for (std::size_t y = x + 1; y < families.size(); ++y) {
                const bool claimed = is_edge_of_R(families[x], families[y]);
                const int rank = polytope_face_rank(blend(families[x], families[y], 0.5));
                CHECK(claimed == (rank == d - 1));
            }
    }
}

TEST_CASE("face rank oracle") {
    CHECK(polytope_face_rank(ZPoint(3)) == 3);            // the origin is a vertex
    CHECK(polytope_face_rank(point3(2, 2, 2)) == 3);
    CHECK(polytope_face_rank(point3(0, 1, 1)) == 2);      // on an edge
    CHECK(polytope_face_rank(point3(1, 1, 1)) == 0);      // interior
    CHECK_THROWS_AS(polytope_face_rank(point3(2, 0, 0)), std::invalid_argument);
}

TEST_CASE("vertex enumeration") {
    const auto v3 = vertices_of_R(3);
    CHECK(v3.size() == 5);
    for (const auto& fam : enumerate_partial_cliques(3)) {
        const ZPoint expect = scaled_indicator(fam, 2.0);
        CHECK(std::count(v3.begin(), v3.end(), expect) == 1);
    }
    CHECK(vertices_of_R(4).size() == 15);
    CHECK_THROWS_AS(vertices_of_R(10), std::invalid_argument);
}
