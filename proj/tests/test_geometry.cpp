#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>

#include "linepush/config.hpp"
#include "linepush/geometry.hpp"

using namespace linepush;

namespace {

// independent reference BFS for the exhaustive connectivity check
bool ref_connected(const CoordSet& cells) {
    if (cells.empty()) return false;
    CoordSet seen{*cells.begin()};
    std::queue<Coord> q;
    q.push(*cells.begin());
    while (!q.empty()) {
        Coord c = q.front();
        q.pop();
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                if (!dx && !dy) continue;
                Coord nb{c.x + dx, c.y + dy};
                if (cells.count(nb) && seen.insert(nb).second) q.push(nb);
            }
    }
    return seen.size() == cells.size();
}

}  // namespace

TEST_CASE("manhattan and chebyshev distances") {
    CHECK(manhattan_distance({0, 0}, {3, 4}) == 7);
    CHECK(manhattan_distance({-2, 5}, {-2, 5}) == 0);
    CHECK(manhattan_distance({1, 1}, {0, 0}) == 2);
    CHECK(chebyshev_distance({0, 0}, {3, 4}) == 4);
    CHECK(chebyshev_distance({1, 1}, {2, 2}) == 1);
}

TEST_CASE("moore neighbourhood order and content") {
    auto nb = moore_neighbours({2, 3});
    REQUIRE(nb.size() == 8);
    CHECK(nb[0] == Coord{2, 4});   // N
    CHECK(nb[1] == Coord{3, 4});   // NE
    CHECK(nb[2] == Coord{3, 3});   // E
    CHECK(nb[4] == Coord{2, 2});   // S
    CHECK(nb[6] == Coord{1, 3});   // W
    CHECK(nb[7] == Coord{1, 4});   // NW
}

TEST_CASE("dir8 helpers") {
    CHECK(dir8_between({0, 0}, {1, 1}) == Dir8::NE);
    CHECK(dir8_between({0, 0}, {0, -1}) == Dir8::S);
    CHECK(!dir8_between({0, 0}, {2, 0}).has_value());
    CHECK(!dir8_between({0, 0}, {0, 0}).has_value());
    CHECK(opposite(Dir8::NE) == Dir8::SW);
    CHECK(opposite(Dir8::W) == Dir8::E);
    auto [v, h] = decompose_diagonal(Dir8::SE);
    CHECK(v == Dir4::S);
    CHECK(h == Dir4::E);
    CHECK(hop_weight(Dir8::N) == 1);
    CHECK(hop_weight(Dir8::NW) == 2);
}

TEST_CASE("is_connected matches reference BFS on all 4x4 subsets") {
    // 16 cells -> 65536 subsets, exhaustive
    for (unsigned mask = 0; mask < 65536; ++mask) {
        CoordSet cells;
        for (int b = 0; b < 16; ++b)
            if (mask & (1u << b)) cells.insert({b % 4, b / 4});
        if (cells.empty()) continue;
        if (is_connected(cells) != ref_connected(cells)) {
            CAPTURE(mask);
            CHECK(is_connected(cells) == ref_connected(cells));
            return;
        }
    }
    CHECK(true);
}

TEST_CASE("configuration validates its path") {
    CHECK_THROWS_AS(Configuration(std::vector<Coord>{}), SimError);
    CHECK_THROWS_AS(Configuration({{0, 0}, {2, 0}}), SimError);
    CHECK_THROWS_AS(Configuration({{0, 0}, {1, 0}, {0, 0}}), SimError);
    Configuration ok({{0, 0}, {1, 1}, {2, 2}});
    CHECK(ok.n() == 3);
    CHECK(ok.connected());
}

TEST_CASE("line move shifts a full straight run into an empty cell") {
    Configuration c({{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    // push the whole line east by one
    c.apply_line_move({0, 0}, Dir4::E, 4);
    CHECK(c.line_moves == 1);
    CHECK(c.occupied({4, 0}));
    CHECK(!c.occupied({0, 0}));
    CHECK(c.occupied({1, 0}));
    // blocked: target occupied
    CHECK_THROWS_AS(c.apply_line_move({4, 0}, Dir4::W, 1), SimError);
    // pushing from an empty cell
    CHECK_THROWS_AS(c.apply_line_move({0, 0}, Dir4::E, 1), SimError);
}

TEST_CASE("line move preserves occupancy count") {
    Configuration c({{0, 0}, {0, 1}, {0, 2}});
    c.apply_line_move({0, 0}, Dir4::N, 3);
    CHECK(c.occupied_cells().size() == 3);
    c.apply_line_move({0, 3}, Dir4::E, 1);
    CHECK(c.occupied_cells().size() == 3);
}
