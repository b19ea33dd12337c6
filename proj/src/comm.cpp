#include "linepush/comm.hpp"

#include <algorithm>

namespace linepush {

// ---------------------------------------------------------------- counter

CounterChain::CounterChain(int length) {
    if (length < 1) throw SimError("counter needs length >= 1");
    bit_.assign(length, 2);
    mark_.assign(length, false);
}

void CounterChain::inject() { ++pending_; }

bool CounterChain::busy() const {
    if (pending_ > 0) return true;
    for (bool m : mark_)
        if (m) return true;
    return false;
}

void CounterChain::step() {
    std::vector<bool> nx(bit_.size(), false);
    for (size_t i = 0; i < bit_.size(); ++i) {
        if (!mark_[i]) continue;
        if (bit_[i] == 1) {
            bit_[i] = 0;
            if (i + 1 < bit_.size())
                nx[i + 1] = true;
            else
                overflow_ = true;
        } else {
            bit_[i] = 1;
        }
    }
    if (pending_ > 0 && !nx[0]) {
        nx[0] = true;
        --pending_;
    }
    mark_ = std::move(nx);
    ++rounds_;
}

unsigned long long CounterChain::value() const {
    unsigned long long v = 0;
    for (size_t i = 0; i < bit_.size(); ++i)
        if (bit_[i] == 1) v |= 1ull << i;
    return v;
}

// ------------------------------------------------------------- define seg

namespace {

bool is_activation(Sym s) { return s == Sym::MarkH || s == Sym::MarkL || s == Sym::MarkT; }

// hop direction from the path predecessor into this agent
Dir8 pred_hop(const Configuration& cfg, int agent) {
    const auto& st = cfg.state(agent);
    if (!st.pred_port) throw SimError("agent has no predecessor port");
    return opposite(*st.pred_port);
}

}  // namespace

DefineSegResult run_define_seg(Configuration& cfg, const std::vector<int>& line,
                               const std::vector<int>& candidates) {
    if (line.empty()) throw SimError("define_seg: empty line");
    const int k = static_cast<int>(line.size());
    const int limit = static_cast<int>(candidates.size());
    if (limit == 0) throw SimError("define_seg: no candidates");

    // chain = line agents then activated agents, in path order
    std::vector<int> chain = line;
    std::vector<bool> back(line.size() + candidates.size(), false);
    int activated = 0;
    bool reflected = false;
    long rounds = 0;
    const long bound = 10L * (k + limit) + 20;

    // the head seeds its activation mark; a lone head sends a solo H
    {
        Symbol h;
        h.kind = Sym::MarkH;
        h.solo = (k == 1);
        cfg.state(line[0]).queue_push(h);
    }

    for (;;) {
        if (++rounds > bound) throw SimError("define_seg did not converge");
        const size_t len = chain.size();
        // snapshot of transmissions
        std::vector<Symbol> snap(len);
        for (size_t j = 0; j < len; ++j) snap[j] = cfg.state(chain[j]).c2;

        // forward shift: an agent takes its predecessor's mark when clear
        for (size_t j = len; j-- > 1;) {
            auto& self = cfg.state(chain[j]);
            if (self.c2.empty() && is_activation(snap[j - 1].kind)) {
                self.c2 = snap[j - 1];
                cfg.state(chain[j - 1]).c2 = Symbol{};
                snap[j - 1] = Symbol{};
                // passing H tells a line agent to queue its own mark
                if (self.c2.kind == Sym::MarkH && j < static_cast<size_t>(k)) {
                    Symbol own;
                    own.kind = (j + 1 == static_cast<size_t>(k)) ? Sym::MarkT : Sym::MarkL;
                    self.queue_push(own);
                }
            }
        }
        // upstream silence lets a waiting mark enter the pipeline
        for (size_t j = 0; j < len; ++j) {
            auto& self = cfg.state(chain[j]);
            bool upstream_clear = (j == 0) || cfg.state(chain[j - 1]).c2.empty();
            if (self.c2.empty() && self.queue_len() > 0 && upstream_clear)
                self.c2 = self.queue_pop();
        }

        // activation at the frontier
        if (!reflected) {
            int frontier = chain.back();
            auto& fst = cfg.state(frontier);
            if (is_activation(fst.c2.kind)) {
                if (activated < limit) {
                    int next = candidates[activated];
                    auto& nst = cfg.state(next);
                    switch (fst.c2.kind) {
                        case Sym::MarkH: nst.label = Label::SegHead; break;
                        case Sym::MarkT: nst.label = Label::SegTail; break;
                        default: nst.label = Label::SegBody; break;
                    }
                    bool solo = fst.c2.solo;
                    bool was_tail = fst.c2.kind == Sym::MarkT;
                    fst.c2 = Symbol{};
                    ++activated;
                    chain.push_back(next);
                    if (solo || was_tail || activated == limit) {
                        // frontier exhausted: the newest agent reflects
                        if (activated >= 2) cfg.state(next).label = Label::SegTail;
                        back[chain.size() - 1] = true;
                        reflected = true;
                    }
                } else {
                    // supply ran out with marks still arriving: drop them
                    fst.c2 = Symbol{};
                }
            }
        }

        // the end mark walks back towards the head, one agent per round
        for (size_t j = 0; j + 1 < chain.size(); ++j) {
            if (back[j + 1]) {
                back[j + 1] = false;
                back[j] = true;
            }
        }
        if (back[0]) break;
    }

    // drop any leftover queued marks from a short supply
    for (int a : chain) {
        cfg.state(a).c2 = Symbol{};
        cfg.state(a).c3 = {};
    }
    return {rounds, activated};
}

// -------------------------------------------------------------- check seg

CheckSegResult run_check_seg(Configuration& cfg, const std::vector<int>& line,
                             const std::vector<int>& seg) {
    if (line.empty() || seg.empty()) throw SimError("check_seg: empty input");
    const int k = static_cast<int>(line.size());
    const int m = static_cast<int>(seg.size());

    // the line's geometric axis at its frontier end; a single agent has no
    // axis yet, so the first hop into the segment sets the reference
    Dir8 axis;
    bool have_axis = false;
    if (k >= 2) {
        Coord tail = cfg.pos(line[k - 1]);
        Coord before = cfg.pos(line[k - 2]);
        auto d = dir8_between(before, tail);
        if (!d || !is_cardinal(*d)) throw SimError("check_seg: line is not straight");
        axis = *d;
        have_axis = true;
    }

    // probe travels head -> segment tail, comparing each path hop
    Symbol probe;
    probe.kind = Sym::Probe;
    for (int j = 0; j < m; ++j) {
        Dir8 hop = pred_hop(cfg, seg[j]);
        if (!have_axis) {
            // reference hop: straight means a cardinal continuation
            if (is_cardinal(hop)) {
                probe.a = hop;
                axis = hop;
                have_axis = true;
            } else {
                probe.kind = Sym::ProbeTurn;
                probe.a = hop;
                probe.b = hop;
                axis = hop;
                have_axis = true;
            }
            continue;
        }
        if (hop == axis) continue;
        if (probe.kind == Sym::Probe) {
            probe.kind = Sym::ProbeTurn;
            probe.b = hop;
            axis = hop;
        } else {
            probe.kind = Sym::Neg;
            break;
        }
    }

    CheckSegResult res;
    // forward k+m-1 hops, reflected verdict m+k-1 hops back, plus emission
    res.rounds = 2L * (k + m) - 1;
    if (probe.kind == Sym::Probe)
        res.verdict = SegVerdict::Aligned;
    else if (probe.kind == Sym::ProbeTurn && is_cardinal(probe.b)) {
        res.verdict = SegVerdict::OneTurn;
        res.turn_dir = probe.b;
    } else
        res.verdict = SegVerdict::Multi;
    return res;
}

// -------------------------------------------------------- compute distance

DistanceResult run_compute_distance(Configuration& cfg, const std::vector<int>& line,
                                    const std::vector<int>& seg) {
    if (line.empty() || seg.empty()) throw SimError("compute_distance: empty input");
    const int k = static_cast<int>(line.size());
    const int m = static_cast<int>(seg.size());
    DistanceResult res;

    // clear the counter cells; LSB lives at the line tail
    for (int a : line) cfg.state(a).c5 = 2;
    cfg.state(line[k - 1]).excess_latch = false;

    // C mark travels head -> segment tail
    long rounds = k + m - 1;

    // return wave: s_t back to s_h; each visited agent emits one increment
    // for a cardinal hop from its predecessor, two for a diagonal (the wave
    // pauses one round for the second). Increments flow to the tail and
    // ripple as carries, one cell per round.
    //
    // Increment j arrives at the LSB `arrival[j]` rounds after the wave
    // starts; carries never collide because arrivals are at least one round
    // apart and travel at the same speed.
    struct Pending {
        long at;      // arrival round at the LSB, relative to wave start
        bool excess;  // second half of a diagonal hop
        bool last;    // emitted by the segment head
    };
    std::vector<Pending> stream;
    long t = 0;  // emission round counter, relative to the wave start
    for (int j = m; j-- > 0;) {
        // wave sits at seg[j]; distance from seg[j]'s cell back to the tail
        // is j+1 hops of transmission
        Dir8 hop = pred_hop(cfg, seg[j]);
        bool diag = !is_cardinal(hop);
        bool head = (j == 0);
        stream.push_back({t + j + 1, false, head && !diag});
        ++t;
        if (diag) {
            stream.push_back({t + j + 1, true, head});
            ++t;
        }
        ++t;  // wave hops to the next agent
    }
    std::sort(stream.begin(), stream.end(), [](const Pending& a, const Pending& b) {
        return a.at < b.at;
    });

    // run the counter over the line's c5 bits
    auto& tail = cfg.state(line[k - 1]);
    std::vector<bool> carry(k, false);
    size_t next = 0;
    long wave_round = 0;
    long settle_round = 0;
    const long bound = 10L * (k + m) + 50;
    for (;;) {
        ++wave_round;
        if (wave_round > bound) throw SimError("compute_distance did not converge");
        std::vector<bool> nx(k, false);
        bool any = false;
        for (int i = 0; i < k; ++i) {
            if (!carry[i]) continue;
            any = true;
            int cell = k - 1 - i;  // bit i sits on line[k-1-i]
            auto& st = cfg.state(line[cell]);
            if (st.c5 == 1) {
                st.c5 = 0;
                if (i + 1 < k)
                    nx[i + 1] = true;
                else {
                    res.overflowed = true;
                    tail.excess_latch = true;  // saturate: distance beyond range
                }
            } else {
                st.c5 = 1;
            }
        }
        while (next < stream.size() && stream[next].at == wave_round) {
            if (nx[0]) throw SimError("compute_distance: increment collision");
            nx[0] = true;
            if (stream[next].excess) tail.excess_latch = true;
            ++next;
            any = true;
            break;
        }
        carry = std::move(nx);
        if (next == stream.size() && !any) {
            bool quiet = true;
            for (bool c : carry) quiet = quiet && !c;
            if (quiet) {
                settle_round = wave_round;
                break;
            }
        }
    }

    // read the value as the verdict leaves the tail
    long value = 0;
    for (int i = 0; i < k; ++i)
        if (cfg.state(line[k - 1 - i]).c5 == 1) value |= 1L << i;
    res.counter_value = value;
    res.branch_two = tail.excess_latch;
    // C forward, the emission/ripple window, verdict back to the head
    res.rounds = rounds + settle_round + (k - 1) + 1;
    return res;
}

// --------------------------------------------------------- collect arrows

CollectResult run_collect_arrows(Configuration& cfg, const std::vector<int>& line,
                                 const std::vector<int>& seg, bool via_midpoint) {
    if (line.empty() || seg.empty()) throw SimError("collect_arrows: empty input");
    const int k = static_cast<int>(line.size());
    const int m = static_cast<int>(seg.size());
    CollectResult res;

    for (int a : line) cfg.state(a).c6 = {};

    // the stream arrives tail-first; diagonals decompose vertical-then-
    // horizontal; an arrow opposite to the previously stored one cancels
    // the pair into a single hash
    std::vector<MapSlot> stored;
    auto push_arrow = [&](Dir4 d) {
        if (!stored.empty() && stored.back().kind == MapSlot::Kind::Arrow &&
            stored.back().dir == opposite(d)) {
            stored.back().kind = MapSlot::Kind::Hash;
            ++res.hashes;
            return;
        }
        stored.push_back({MapSlot::Kind::Arrow, d});
    };
    for (int j = m; j-- > 0;) {
        Dir8 hop = pred_hop(cfg, seg[j]);
        if (is_cardinal(hop)) {
            push_arrow(to_dir4(hop));
        } else {
            auto [v, h] = decompose_diagonal(hop);
            push_arrow(v);
            push_arrow(h);
        }
    }

    if (static_cast<int>(stored.size()) > 2 * k)
        throw SimError("collect_arrows: map overflow");

    // tail-first fill, two slots per line agent
    res.stored = static_cast<int>(stored.size());
    for (size_t idx = 0; idx < stored.size(); ++idx) {
        int cell = k - 1 - static_cast<int>(idx / 2);
        cfg.state(line[cell]).c6[idx % 2] = stored[idx];
    }

    res.rounds = 2L * (k + m);
    if (via_midpoint) res.rounds += (3L * m) / 2 + 2;
    return res;
}

}  // namespace linepush
