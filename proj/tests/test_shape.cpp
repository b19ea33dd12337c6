#include <doctest.h>

#include <random>

#include "linepush/shape.hpp"

using namespace linepush;

TEST_CASE("parse accepts comments and blank lines") {
    auto cells = parse_shape("# a diagonal\n0 0\n\n1 1\n2 2\n");
    REQUIRE(cells.size() == 3);
    CHECK(cells[0] == Coord{0, 0});
    CHECK(cells[2] == Coord{2, 2});
}

TEST_CASE("parse rejects bad input") {
    CHECK_THROWS_AS(parse_shape("0 0\n2 0\n"), SimError);       // not adjacent
    CHECK_THROWS_AS(parse_shape("0 0\n1 0\n0 0\n"), SimError);  // duplicate
    CHECK_THROWS_AS(parse_shape("zero zero\n"), SimError);      // malformed
    CHECK_THROWS_AS(parse_shape("# only a comment\n"), SimError);
}

TEST_CASE("serialize round-trips") {
    auto d = gen_diagonal(3);
    CHECK(serialize_shape(d) == "0 0\n1 1\n2 2\n");
    CHECK(parse_shape(serialize_shape(d)) == d);
}

TEST_CASE("round-trip over many random shapes") {
    std::mt19937_64 seeds(7);
    for (int rep = 0; rep < 1000; ++rep) {
        auto cells = gen_random(12, seeds());
        CHECK(parse_shape(serialize_shape(cells)) == cells);
    }
}

TEST_CASE("diagonal generator") {
    auto d = gen_diagonal(4);
    CHECK(d == std::vector<Coord>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    CHECK(gen_diagonal(1) == std::vector<Coord>{{0, 0}});
}

TEST_CASE("staircase generator") {
    auto s = gen_staircase(4, 2);
    CHECK(s == std::vector<Coord>{{0, 0}, {1, 0}, {1, 1}, {2, 1}});
    auto tall = gen_staircase(3, 1);
    CHECK(tall == std::vector<Coord>{{0, 0}, {0, 1}, {0, 2}});
}

TEST_CASE("spiral generator is a valid path of n distinct cells") {
    for (int n : {1, 2, 5, 16, 33, 64}) {
        auto s = gen_spiral(n);
        REQUIRE(static_cast<int>(s.size()) == n);
        CoordSet seen;
        for (size_t i = 0; i < s.size(); ++i) {
            CHECK(seen.insert(s[i]).second);
            if (i > 0) CHECK(chebyshev_distance(s[i - 1], s[i]) == 1);
        }
    }
}

TEST_CASE("random generator is deterministic in seed") {
    auto a = gen_random(16, 42);
    auto b = gen_random(16, 42);
    CHECK(a == b);
    auto c = gen_random(16, 43);
    CHECK(a != c);
}

TEST_CASE("random shapes are valid paths") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        auto cells = gen_random(32, seed);
        REQUIRE(cells.size() == 32);
        CoordSet seen;
        for (size_t i = 0; i < cells.size(); ++i) {
            CHECK(seen.insert(cells[i]).second);
            if (i > 0) CHECK(chebyshev_distance(cells[i - 1], cells[i]) == 1);
        }
    }
}
