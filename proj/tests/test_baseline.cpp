#include <doctest.h>

#include "linepush/baseline.hpp"

using namespace linepush;

TEST_CASE("diagonal baseline matches the closed form for n up to 64") {
    for (int n = 1; n <= 64; ++n) {
        auto rep = baseline_diagonal(n);
        CAPTURE(n);
        CHECK(rep.moves == static_cast<long>(n) * (n - 1) / 2);
        CHECK(rep.rounds == (n > 1 ? n - 1 : 0));
        CHECK(rep.connected_all_rounds);
        // ends in a horizontal line
        REQUIRE(static_cast<int>(rep.final_cells.size()) == n);
        for (const auto& c : rep.final_cells) CHECK(c.y == 0);
    }
}

TEST_CASE("oracle distance") {
    CHECK(oracle_distance({0, 0}, {0, 0}) == 0);
    CHECK(oracle_distance({0, 0}, {3, -4}) == 7);
    CHECK(oracle_distance({-1, -1}, {1, 1}) == 4);
}

TEST_CASE("connectivity history audit") {
    std::vector<std::vector<Coord>> good{{{0, 0}, {1, 1}}, {{0, 0}, {1, 0}}};
    CHECK(audit_connectivity_history(good));
    std::vector<std::vector<Coord>> gap{{{0, 0}, {2, 2}}};
    CHECK(!audit_connectivity_history(gap));
    std::vector<std::vector<Coord>> single{{{5, 5}}};
    CHECK(audit_connectivity_history(single));
}
