#include <doctest.h>

#include "linepush/sync.hpp"

using namespace linepush;

TEST_CASE("single agent fires immediately") {
    SyncChain c(1);
    c.step();
    CHECK(c.all_fired());
    CHECK(c.rounds() == 1);
}

TEST_CASE("all chain lengths 1..64 fire simultaneously within 3x length") {
    for (int len = 1; len <= 64; ++len) {
        SyncChain chain(len);
        long first_fire = -1;
        while (!chain.all_fired()) {
            REQUIRE(chain.rounds() <= 3L * len);
            chain.step();
            if (first_fire < 0) {
                for (const auto& cell : chain.cells()) {
                    if (cell.fired) {
                        first_fire = chain.rounds();
                        break;
                    }
                }
            }
        }
        CAPTURE(len);
        // nobody fires before the round everyone fires
        CHECK(first_fire == chain.rounds());
        CHECK(chain.rounds() <= 3L * len);
    }
}

TEST_CASE("sync_rounds is deterministic and matches a fresh simulation") {
    for (int len : {1, 2, 7, 8, 33, 64}) {
        long a = sync_rounds(len);
        long b = sync_rounds(len);
        CHECK(a == b);
        SyncChain chain(len);
        while (!chain.all_fired()) chain.step();
        CHECK(a == chain.rounds());
    }
}

TEST_CASE("eight agent span fires within 24 rounds") {
    CHECK(sync_rounds(8) <= 24);
}
