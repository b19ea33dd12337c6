#include "linepush/geometry.hpp"

#include <deque>

namespace linepush {

bool is_connected(const CoordSet& cells) {
    if (cells.size() <= 1) return true;
    CoordSet seen;
    std::deque<Coord> queue;
    queue.push_back(*cells.begin());
    seen.insert(*cells.begin());
    while (!queue.empty()) {
        Coord c = queue.front();
        queue.pop_front();
        for (const Coord& nb : moore_neighbours(c)) {
            if (cells.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                queue.push_back(nb);
            }
        }
    }
    return seen.size() == cells.size();
}

}  // namespace linepush
