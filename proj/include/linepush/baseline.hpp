#pragma once

#include <vector>

#include "linepush/geometry.hpp"

namespace linepush {

struct BaselineReport {
    long rounds = 0;
    long moves = 0;  // individual single-cell moves, not line moves
    std::vector<Coord> final_cells;
    bool connected_all_rounds = true;
};

// Reference transformation of the diagonal by individual moves: every agent
// at (x,y) steps down one cell per round while (x-1,y-1) is occupied. Ends
// with a horizontal line after n-1 rounds and n(n-1)/2 moves.
BaselineReport baseline_diagonal(int n);

// Manhattan distance computed directly from coordinates; kept here so the
// protocol's counter has an oracle with no shared code.
long oracle_distance(Coord a, Coord b);

// Every configuration in the history is Moore-connected. Written against
// raw cell sets, independent of the simulator's own auditing.
bool audit_connectivity_history(const std::vector<std::vector<Coord>>& history);

}  // namespace linepush
