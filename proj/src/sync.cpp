#include "linepush/sync.hpp"

#include <map>
#include <stdexcept>

namespace linepush {

// Timing constants. The initiator's slow wave starts two rounds behind a
// meet-created wall's because the far end only turns into a wall once the
// fast wave bounces off the boundary; with these paces every meet lands
// dead centre, so all leaf gaps close in the same round.
namespace {
constexpr uint8_t kTopPace = 0;
constexpr uint8_t kInnerPace = 2;
}  // namespace

SyncChain::SyncChain(int length) {
    if (length < 1) throw std::invalid_argument("sync chain needs length >= 1");
    cells_.resize(length);
    cells_[0].wall = true;
    cells_[0].quiet = true;
    if (length > 1) {
        cells_[0].fast_r = true;
        cells_[0].slow_r = true;
        cells_[0].pace_r = kTopPace;
    }
}

bool SyncChain::all_fired() const {
    for (const auto& c : cells_)
        if (!c.fired) return false;
    return true;
}

bool SyncChain::step() {
    const int n = static_cast<int>(cells_.size());
    const std::vector<SyncCell> s = cells_;
    std::vector<SyncCell> nx(n);

    for (int i = 0; i < n; ++i) {
        nx[i].wall = s[i].wall;
        nx[i].fired = s[i].fired;
        nx[i].quiet = s[i].quiet;
    }

    // a wall whose whole neighbourhood is walled fires next round
    for (int i = 0; i < n; ++i) {
        if (s[i].wall && (i == 0 || s[i - 1].wall) && (i == n - 1 || s[i + 1].wall))
            nx[i].fired = true;
    }

    std::vector<bool> mv_r(n, false), mv_l(n, false);
    for (int i = 0; i < n; ++i) {
        if (s[i].slow_r) mv_r[i] = (s[i].pace_r + 1 >= 3);
        if (s[i].slow_l) mv_l[i] = (s[i].pace_l + 1 >= 3);
    }

    // crossing meets: fast and slow swap cells travelling opposite ways;
    // both cells become walls (the even-gap case)
    std::vector<bool> used_fl(n, false), used_fr(n, false);
    std::vector<bool> used_sr(n, false), used_sl(n, false);
    for (int i = 0; i + 1 < n; ++i) {
        if (s[i].slow_r && mv_r[i] && s[i + 1].fast_l) {
            nx[i].wall = nx[i + 1].wall = true;
            used_sr[i] = used_fl[i + 1] = true;
        }
        if (s[i + 1].slow_l && mv_l[i + 1] && s[i].fast_r) {
            nx[i].wall = nx[i + 1].wall = true;
            used_sl[i + 1] = used_fr[i] = true;
        }
    }

    // fast waves: one cell per round, reflecting off walls; the chain's far
    // end turns into a quiet wall when first discovered
    for (int i = 0; i < n; ++i) {
        if (s[i].fast_r && !used_fr[i]) {
            if (i + 1 >= n) {
                nx[i].wall = true;
                nx[i].quiet = true;
                nx[i].fast_l = true;
            } else if (s[i + 1].wall) {
                nx[i].fast_l = true;
            } else {
                nx[i + 1].fast_r = true;
            }
        }
        if (s[i].fast_l && !used_fl[i]) {
            if (i - 1 < 0 || s[i - 1].wall) {
                nx[i].fast_r = true;
            } else {
                nx[i - 1].fast_l = true;
            }
        }
    }

    // slow waves: one cell per three rounds; one that runs into a wall is spent
    for (int i = 0; i < n; ++i) {
        if (s[i].slow_r && !used_sr[i]) {
            if (!mv_r[i]) {
                nx[i].slow_r = true;
                nx[i].pace_r = s[i].pace_r + 1;
            } else if (i + 1 < n && !s[i + 1].wall) {
                nx[i + 1].slow_r = true;
                nx[i + 1].pace_r = 0;
            }
        }
        if (s[i].slow_l && !used_sl[i]) {
            if (!mv_l[i]) {
                nx[i].slow_l = true;
                nx[i].pace_l = s[i].pace_l + 1;
            } else if (i - 1 >= 0 && !s[i - 1].wall) {
                nx[i - 1].slow_l = true;
                nx[i - 1].pace_l = 0;
            }
        }
    }

    // same-cell meets of opposite-direction waves (the odd-gap case)
    for (int i = 0; i < n; ++i) {
        if ((nx[i].fast_l && nx[i].slow_r) || (nx[i].fast_r && nx[i].slow_l)) {
            nx[i].wall = true;
            nx[i].fast_l = nx[i].fast_r = false;
            nx[i].slow_l = nx[i].slow_r = false;
            nx[i].pace_l = nx[i].pace_r = 0;
        }
    }

    // a freshly risen meet wall seeds both of its gaps with new wave pairs
    for (int i = 0; i < n; ++i) {
        if (nx[i].wall && !s[i].wall && !nx[i].quiet) {
            nx[i].fast_l = nx[i].fast_r = false;
            nx[i].slow_l = nx[i].slow_r = false;
            nx[i].pace_l = nx[i].pace_r = 0;
            if (i + 1 < n && !nx[i + 1].wall) {
                nx[i].fast_r = nx[i].slow_r = true;
                nx[i].pace_r = kInnerPace;
            }
            if (i - 1 >= 0 && !nx[i - 1].wall) {
                nx[i].fast_l = nx[i].slow_l = true;
                nx[i].pace_l = kInnerPace;
            }
        }
    }

    cells_ = std::move(nx);
    ++rounds_;
    return all_fired();
}

long sync_rounds(int length) {
    static std::map<int, long> memo;
    auto it = memo.find(length);
    if (it != memo.end()) return it->second;
    SyncChain chain(length);
    const long limit = 10L * length + 10;
    while (!chain.all_fired()) {
        if (chain.rounds() > limit)
            throw std::runtime_error("synchroniser failed to fire");
        chain.step();
    }
    memo[length] = chain.rounds();
    return chain.rounds();
}

}  // namespace linepush
