#include "linepush/baseline.hpp"

#include <cstdlib>
#include <queue>

namespace linepush {

namespace {

// deliberately separate from geometry.cpp's BFS: oracles share nothing
// with the code they check
bool cells_connected(const std::vector<Coord>& cells) {
    if (cells.empty()) return false;
    CoordSet occ(cells.begin(), cells.end());
    CoordSet seen{cells[0]};
    std::queue<Coord> q;
    q.push(cells[0]);
    while (!q.empty()) {
        Coord c = q.front();
        q.pop();
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                if (dx == 0 && dy == 0) continue;
                Coord nb{c.x + dx, c.y + dy};
                if (occ.count(nb) && seen.insert(nb).second) q.push(nb);
            }
    }
    return seen.size() == occ.size();
}

}  // namespace

BaselineReport baseline_diagonal(int n) {
    BaselineReport rep;
    std::vector<Coord> cells;
    for (int i = 0; i < n; ++i) cells.push_back({i, i});
    rep.connected_all_rounds = cells_connected(cells);
    for (;;) {
        CoordSet occ(cells.begin(), cells.end());
        std::vector<size_t> movers;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (occ.count({cells[i].x - 1, cells[i].y - 1})) movers.push_back(i);
        }
        if (movers.empty()) break;
        for (size_t i : movers) cells[i].y -= 1;
        rep.moves += static_cast<long>(movers.size());
        ++rep.rounds;
        if (!cells_connected(cells)) rep.connected_all_rounds = false;
    }
    rep.final_cells = cells;
    return rep;
}

long oracle_distance(Coord a, Coord b) {
    return std::labs(static_cast<long>(a.x) - b.x) + std::labs(static_cast<long>(a.y) - b.y);
}

bool audit_connectivity_history(const std::vector<std::vector<Coord>>& history) {
    for (const auto& cells : history)
        if (!cells_connected(cells)) return false;
    return true;
}

}  // namespace linepush
