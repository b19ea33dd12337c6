#pragma once

#include <vector>

#include "linepush/config.hpp"

namespace linepush {

// Standalone distributed binary counter: a chain of bit cells where
// increments enter at the least significant end and carries ripple towards
// the most significant end, one cell per round.
class CounterChain {
public:
    explicit CounterChain(int length);
    // queue one increment at the LSB end; it enters on the next step
    void inject();
    void step();
    bool busy() const;
    unsigned long long value() const;
    long rounds() const { return rounds_; }
    bool overflowed() const { return overflow_; }
    int length() const { return static_cast<int>(bit_.size()); }

private:
    std::vector<uint8_t> bit_;   // index 0 = LSB; 0, 1, or 2 = empty
    std::vector<bool> mark_;     // increment arriving at cell i this round
    int pending_ = 0;
    bool overflow_ = false;
    long rounds_ = 0;
};

// The sub-phase simulators below run a synchronous mark-passing pipeline
// over the given agents (line ordered head..tail, segment head..tail),
// mutate the configuration's agent states, and report rounds consumed.

struct DefineSegResult {
    long rounds = 0;
    int activated = 0;
};
// Activates up to candidates.size() inactive path agents after the line
// tail; labels them segment head/body/tail and returns once the end mark
// has travelled back to the line head.
DefineSegResult run_define_seg(Configuration& cfg, const std::vector<int>& line,
                               const std::vector<int>& candidates);

enum class SegVerdict { Aligned, OneTurn, Multi };

struct CheckSegResult {
    long rounds = 0;
    SegVerdict verdict = SegVerdict::Multi;
    Dir8 turn_dir = Dir8::N;  // post-turn direction when verdict == OneTurn
};
CheckSegResult run_check_seg(Configuration& cfg, const std::vector<int>& line,
                             const std::vector<int>& seg);

struct DistanceResult {
    long rounds = 0;
    long counter_value = 0;   // line c5 bits when the branch verdict leaves
    bool branch_two = false;  // distance exceeds the line length
    bool overflowed = false;  // carry ran past the head (saturates the branch)
};
DistanceResult run_compute_distance(Configuration& cfg, const std::vector<int>& line,
                                    const std::vector<int>& seg);

struct CollectResult {
    long rounds = 0;
    int stored = 0;  // arrows and hashes placed into c6 slots
    int hashes = 0;
};
CollectResult run_collect_arrows(Configuration& cfg, const std::vector<int>& line,
                                 const std::vector<int>& seg, bool via_midpoint);

}  // namespace linepush
