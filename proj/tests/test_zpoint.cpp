#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbsep/errors.hpp"
#include "cbsep/zpoint.hpp"

using namespace cbsep;

TEST_CASE("pair indexing") {
    CHECK(pair_count(1) == 0);
    CHECK(pair_count(4) == 6);
    CHECK(pair_count(8) == 28);

    // lexicographic pair order for n = 4
    CHECK(pair_index(4, 0, 1) == 0);
    CHECK(pair_index(4, 0, 2) == 1);
    CHECK(pair_index(4, 0, 3) == 2);
    CHECK(pair_index(4, 1, 2) == 3);
    CHECK(pair_index(4, 1, 3) == 4);
    CHECK(pair_index(4, 2, 3) == 5);

    int k = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) CHECK(pair_index(6, i, j) == k++);
    CHECK(k == pair_count(6));
}

TEST_CASE("accessors keep symmetry structural") {
    ZPoint z(4);
    CHECK(z.dim() == 6);
    CHECK(z.sum() == 0.0);

    z.set(2, 0, 1.5);
    CHECK(z(0, 2) == 1.5);
    CHECK(z(2, 0) == 1.5);
    CHECK(z(1, 1) == 0.0);
    CHECK(z.at_index(pair_index(4, 0, 2)) == 1.5);

    z.set_index(5, 0.25);
    CHECK(z(2, 3) == 0.25);
    CHECK(z.sum() == doctest::Approx(1.75));

    CHECK_THROWS_AS(z.set(0, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(z.set(0, 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(z.set(0, 1, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(z.set(0, 1, 2.5), std::invalid_argument);
    CHECK_THROWS_AS(ZPoint(0), std::invalid_argument);
}

TEST_CASE("from_full validates and clamps") {
    const std::vector<std::vector<double>> ok{
        {0, 1, 2}, {1, 0, 0.5}, {2, 0.5, 0}};
    const ZPoint z = ZPoint::from_full(ok);
    CHECK(z(0, 1) == 1.0);
    CHECK(z(0, 2) == 2.0);
    CHECK(z(1, 2) == 0.5);

    // a hair above 2 from floating-point noise gets clamped
    const ZPoint clamped = ZPoint::from_full(
        {{0, 2.0 + 1e-12}, {2.0 + 1e-12, 0}});
    CHECK(clamped(0, 1) == 2.0);

    CHECK_THROWS_AS(ZPoint::from_full({{0, 1}, {1.1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(ZPoint::from_full({{0.2, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(ZPoint::from_full({{0, 3}, {3, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(ZPoint::from_full({{0, 1, 0}, {1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("ordering and interpolation") {
    ZPoint a(3), b(3);
    b.set(0, 1, 1.0);
    CHECK(a < b);
    CHECK_FALSE(b < a);
    CHECK_FALSE(a < a);
    CHECK(a == a);
    CHECK_FALSE(a == b);

    b.set(0, 2, 2.0);
    const ZPoint mid = lerp(a, b, 0.5);
    CHECK(mid(0, 1) == doctest::Approx(0.5));
    CHECK(mid(0, 2) == doctest::Approx(1.0));
    CHECK(mid(1, 2) == 0.0);
    CHECK(lerp(a, b, 0.0) == a);
    CHECK(lerp(a, b, 1.0) == b);
}

TEST_CASE("text round trip is exact") {
    ZPoint z(3);
    z.set(0, 1, 1.0 / 3.0);
    z.set(0, 2, 2.0 - 1e-13);
    z.set(1, 2, 0.1);
    const ZPoint back = parse_zpoint_string(format_zpoint(z));
    CHECK(back == z);  // shortest-round-trip double formatting

    CHECK_THROWS_AS(parse_zpoint_string(""), ParseError);
    CHECK_THROWS_AS(parse_zpoint_string("2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_zpoint_string("2\n0 1\n1.5 0\n"), ParseError);
    CHECK_THROWS_AS(parse_zpoint_string("2\n0 9\n9 0\n"), ParseError);
}
