#pragma once

#include <optional>
#include <vector>

#include "linepush/config.hpp"

namespace linepush {

// A planned traversal: `route` is a cardinal-consecutive list of distinct
// cells whose first `m` entries are the snake's current cells (rear to
// front). Route cells occupied by non-snake agents are pinned: those agents
// never move logically (the executor swaps them back within the advance).
// The snake's tokens flow through the non-pinned positions and finish on
// the last m of them, which are the caller's target cells.
struct RoutePlan {
    std::vector<Coord> route;
    std::vector<int> np;  // indices of non-pinned route positions, ascending
    int m = 0;
    int advances() const { return static_cast<int>(np.size()) - m; }
};

struct PushStats {
    long moves = 0;
    long rounds = 0;
    int advances = 0;
};

// Searches for a valid traversal from the snake's current position onto
// `targets` (given in the order the route will enter them; they must be
// empty). Candidates are tried in a fixed priority: the two L-shaped
// routes, midpoint-split variants, then a connectivity-hugging fallback.
// Each candidate is validated by simulating every advance on a copy and
// checking Moore connectivity of the whole configuration after each one.
std::optional<RoutePlan> plan_snake_route(const Configuration& cfg,
                                          const std::vector<int>& snake,
                                          const std::vector<Coord>& targets);

// Applies the plan: per advance, pushes the maximal straight runs of the
// moving span front-most first, then restores pinned bystanders and
// reassigns the snake onto the next non-pinned window. Charges
// synchronisation rounds per advance when `charge_sync` is set.
PushStats execute_route(Configuration& cfg, const std::vector<int>& snake,
                        const RoutePlan& plan, bool charge_sync = true);

}  // namespace linepush
