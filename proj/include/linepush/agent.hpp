#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "linepush/geometry.hpp"

namespace linepush {

// c1 labels. Parked marks agents of an outer line while a recursive call runs.
enum class Label : uint8_t {
    Inactive,     // k
    LineHead,     // l_h
    LineBody,     // l
    LineTail,     // l_t
    SegHead,      // s_h
    SegBody,      // s
    SegTail,      // s_t
    SegTailMid,   // s_t' (midpoint, first half tail)
    SegHeadMid,   // s_h' (midpoint, second half head)
    Parked,
};

const char* label_name(Label l);
char label_glyph(Label l);

// Symbols carried in transmission (c2) and waiting (c3) components.
enum class Sym : uint8_t {
    None,
    MarkH,        // segment-head activation
    MarkL,        // segment-body activation
    MarkT,        // segment-tail activation
    End,          // reflected end-of-activation
    Probe,        // line direction travelling through the segment (CheckSeg)
    ProbeTurn,    // composite: direction plus one observed turn
    Neg,          // two or more turns observed
    Reflect,      // CheckSeg verdict travelling back (payload in a)
    CMark,        // start-counting trigger
    Inc,          // counter increment
    IncLast,      // final counter increment from s_h
    BranchOne,    // route fits in one leg
    BranchTwo,    // route goes via the midpoint
    Arrow,        // collected route arrow (cardinal, in a)
    Fast,         // midpoint fast wave
    Slow,         // midpoint slow wave (1 cell per 3 rounds)
    Mid,          // midpoint found notification
};

struct Symbol {
    Sym kind = Sym::None;
    Dir8 a = Dir8::N;    // primary direction payload
    Dir8 b = Dir8::N;    // secondary payload (ProbeTurn)
    bool excess = false; // second half of a diagonal increment
    bool solo = false;   // head mark emitted by a single-agent line
    uint8_t pace = 0;    // slow-wave phase counter

    bool empty() const { return kind == Sym::None; }
};

// c6 route-map slot: empty, an arrow, or a hash left by a cancelled pair.
struct MapSlot {
    enum class Kind : uint8_t { Empty, Arrow, Hash } kind = Kind::Empty;
    Dir4 dir = Dir4::N;
};

struct AgentState {
    Label label = Label::Inactive;
    Symbol c2;                        // transmission
    std::array<Symbol, 2> c3{};       // waiting queue, FIFO, at most two
    std::optional<Dir8> pred_port;    // c4 towards path predecessor
    std::optional<Dir8> succ_port;    // c4 towards path successor
    bool star = false;                // c4 collected-star flag
    uint8_t c5 = 2;                   // counter bit: 0, 1, 2 = empty
    std::array<MapSlot, 2> c6{};      // route map slots
    std::optional<Dir4> c7;           // push direction
    bool excess_latch = false;        // line tail: saw a diagonal excess increment
    uint8_t pace = 0;                 // mod-3 slow wave counter

    int queue_len() const {
        return (c3[0].empty() ? 0 : 1) + (c3[1].empty() ? 0 : 1);
    }
    void queue_push(const Symbol& s) {
        if (c3[0].empty()) c3[0] = s;
        else if (c3[1].empty()) c3[1] = s;
    }
    Symbol queue_pop() {
        Symbol s = c3[0];
        c3[0] = c3[1];
        c3[1] = Symbol{};
        return s;
    }
    void clear_transient() {
        c2 = Symbol{};
        c3 = {};
        c5 = 2;
        c6 = {};
        c7.reset();
        excess_latch = false;
        pace = 0;
    }
};

}  // namespace linepush
