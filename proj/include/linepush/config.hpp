#pragma once

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "linepush/agent.hpp"
#include "linepush/geometry.hpp"

namespace linepush {

struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One committed line move: `len` consecutive agents starting at `pusher`
// all shift one cell towards `dir`.
struct MoveEvent {
    Coord pusher;
    Dir4 dir;
    int len;
};

// World box of side 4n centred on the initial shape. Leaving it is a bug.
struct WorldBox {
    int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool contains(Coord c) const {
        return c.x >= min_x && c.x <= max_x && c.y >= min_y && c.y <= max_y;
    }
};

class Configuration {
public:
    Configuration() = default;
    // Cells in Hamiltonian path order p_1..p_n; consecutive cells must be
    // Moore-adjacent and all distinct.
    explicit Configuration(const std::vector<Coord>& path_cells);

    int n() const { return static_cast<int>(pos_.size()); }
    long round = 0;
    long line_moves = 0;

    Coord pos(int agent) const { return pos_[agent]; }
    const AgentState& state(int agent) const { return state_[agent]; }
    AgentState& state(int agent) { return state_[agent]; }
    // Path order: path(0) is p_1.
    int path(int i) const { return path_[i]; }

    bool occupied(Coord c) const { return occ_.count(c) != 0; }
    // Agent at cell, or -1.
    int agent_at(Coord c) const {
        auto it = occ_.find(c);
        return it == occ_.end() ? -1 : it->second;
    }

    CoordSet occupied_cells() const;
    const WorldBox& box() const { return box_; }

    // The line-move primitive. The `len` cells from `pusher` towards `dir`
    // must all be occupied and the cell beyond must be empty and in-box.
    // Records the move in `last_moves` and bumps the move counter.
    void apply_line_move(Coord pusher, Dir4 dir, int len);

    // Exchange the full states of two Moore-adjacent agents (bodies stay).
    void swap_states(int a, int b);

    // Teleport-free relocation helper used by the push executor after it has
    // applied the physical line moves of a cycle: reassigns which logical
    // agent sits on which occupied cell. Every target cell must already be
    // occupied and the assignment must be a permutation of the agents given.
    void assign_positions(const std::vector<int>& agents,
                          const std::vector<Coord>& cells);

    std::vector<MoveEvent> last_moves;  // moves committed in the current round

    bool connected() const { return is_connected(occupied_cells()); }

private:
    std::vector<Coord> pos_;
    std::vector<AgentState> state_;
    std::vector<int> path_;
    std::unordered_map<Coord, int, CoordHash> occ_;
    WorldBox box_;
};

}  // namespace linepush
