#pragma once

#include <cstdint>
#include <vector>

namespace linepush {

// Firing-squad synchroniser over a chain of agents. The initiator sits at
// index 0. Recursive halving with a fast wave (one cell per round) and a slow
// wave (one cell per three rounds); their meeting point becomes a new
// initiator for both halves. All agents fire in the same round, within 3x the
// chain length.
struct SyncCell {
    bool wall = false;
    bool fired = false;
    // Travelling signals held this round. R = away from index 0.
    bool fast_r = false, fast_l = false;
    bool slow_r = false, slow_l = false;
    uint8_t pace_r = 0, pace_l = 0;  // slow-wave phase counters
    bool quiet = false;  // wall that must not seed new waves (ends)
};

class SyncChain {
public:
    explicit SyncChain(int length);
    // Advance one synchronous round. Returns true once every agent has fired.
    bool step();
    bool all_fired() const;
    long rounds() const { return rounds_; }
    const std::vector<SyncCell>& cells() const { return cells_; }

private:
    std::vector<SyncCell> cells_;
    long rounds_ = 0;
};

// Rounds until a chain of the given length fires (deterministic; memoised).
long sync_rounds(int length);

}  // namespace linepush
