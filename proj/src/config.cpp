#include "linepush/config.hpp"

#include <algorithm>

namespace linepush {

const char* label_name(Label l) {
    switch (l) {
        case Label::Inactive:   return "k";
        case Label::LineHead:   return "lh";
        case Label::LineBody:   return "l";
        case Label::LineTail:   return "lt";
        case Label::SegHead:    return "sh";
        case Label::SegBody:    return "s";
        case Label::SegTail:    return "st";
        case Label::SegTailMid: return "st2";
        case Label::SegHeadMid: return "sh2";
        case Label::Parked:     return "pk";
    }
    return "?";
}

char label_glyph(Label l) {
    switch (l) {
        case Label::Inactive:   return 'o';
        case Label::LineHead:   return 'H';
        case Label::LineBody:   return '=';
        case Label::LineTail:   return 'T';
        case Label::SegHead:    return 'h';
        case Label::SegBody:    return 's';
        case Label::SegTail:    return 't';
        case Label::SegTailMid: return 'm';
        case Label::SegHeadMid: return 'n';
        case Label::Parked:     return 'p';
    }
    return '?';
}

Configuration::Configuration(const std::vector<Coord>& path_cells) {
    int n = static_cast<int>(path_cells.size());
    if (n == 0) throw SimError("empty shape");
    pos_ = path_cells;
    state_.resize(n);
    path_.resize(n);
    int min_x = path_cells[0].x, max_x = path_cells[0].x;
    int min_y = path_cells[0].y, max_y = path_cells[0].y;
    for (int i = 0; i < n; ++i) {
        path_[i] = i;
        if (!occ_.emplace(path_cells[i], i).second)
            throw SimError("duplicate cell in path");
        min_x = std::min(min_x, path_cells[i].x);
        max_x = std::max(max_x, path_cells[i].x);
        min_y = std::min(min_y, path_cells[i].y);
        max_y = std::max(max_y, path_cells[i].y);
        if (i > 0 && chebyshev_distance(path_cells[i - 1], path_cells[i]) != 1)
            throw SimError("path cells not Moore-adjacent");
        state_[i].pred_port = i > 0 ? dir8_between(path_cells[i], path_cells[i - 1])
                                    : std::nullopt;
        state_[i].succ_port = i + 1 < n
                                  ? dir8_between(path_cells[i], path_cells[i + 1])
                                  : std::nullopt;
    }
    // World box: side 4n centred on the initial bounding box.
    int cx = (min_x + max_x) / 2, cy = (min_y + max_y) / 2;
    int half = 2 * n;
    box_ = {cx - half, cy - half, cx + half, cy + half};
}

CoordSet Configuration::occupied_cells() const {
    CoordSet out;
    out.reserve(pos_.size() * 2);
    for (const Coord& c : pos_) out.insert(c);
    return out;
}

void Configuration::apply_line_move(Coord pusher, Dir4 dir, int len) {
    if (len <= 0) throw SimError("line move of non-positive length");
    Coord c = pusher;
    std::vector<int> movers;
    movers.reserve(len);
    for (int i = 0; i < len; ++i) {
        auto it = occ_.find(c);
        if (it == occ_.end()) throw SimError("line move over an empty cell");
        movers.push_back(it->second);
        c = step(c, dir);
    }
    if (occ_.count(c)) throw SimError("line move target cell occupied");
    if (!box_.contains(c)) throw SimError("line move leaves the world box");
    // Shift front to back so each write lands on a vacated cell.
    for (int i = len - 1; i >= 0; --i) {
        int a = movers[i];
        occ_.erase(pos_[a]);
        pos_[a] = step(pos_[a], dir);
        occ_.emplace(pos_[a], a);
    }
    last_moves.push_back({pusher, dir, len});
    ++line_moves;
}

void Configuration::swap_states(int a, int b) {
    if (chebyshev_distance(pos_[a], pos_[b]) > 1)
        throw SimError("state swap between non-adjacent agents");
    std::swap(occ_[pos_[a]], occ_[pos_[b]]);
    std::swap(pos_[a], pos_[b]);
}

void Configuration::assign_positions(const std::vector<int>& agents,
                                     const std::vector<Coord>& cells) {
    if (agents.size() != cells.size())
        throw SimError("assignment arity mismatch");
    for (const Coord& c : cells)
        if (!occ_.count(c)) throw SimError("assignment to an empty cell");
    // All listed cells must currently be held by the listed agents.
    std::vector<int> held;
    for (const Coord& c : cells) held.push_back(occ_.at(c));
    std::vector<int> a_sorted = agents, h_sorted = held;
    std::sort(a_sorted.begin(), a_sorted.end());
    std::sort(h_sorted.begin(), h_sorted.end());
    if (a_sorted != h_sorted) throw SimError("assignment is not a permutation");
    for (size_t i = 0; i < agents.size(); ++i) {
        pos_[agents[i]] = cells[i];
        occ_[cells[i]] = agents[i];
    }
}

}  // namespace linepush
