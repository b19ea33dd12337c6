#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

namespace linepush {

// x grows east, y grows north.
struct Coord {
    int x = 0;
    int y = 0;
    auto operator<=>(const Coord&) const = default;
};

struct CoordHash {
    size_t operator()(const Coord& c) const {
        return std::hash<long long>()((static_cast<long long>(c.x) << 32) ^
                                      static_cast<unsigned int>(c.y));
    }
};

using CoordSet = std::unordered_set<Coord, CoordHash>;

enum class Dir4 : uint8_t { N, E, S, W };
enum class Dir8 : uint8_t { N, NE, E, SE, S, SW, W, NW };

inline Coord offset(Dir4 d) {
    switch (d) {
        case Dir4::N: return {0, 1};
        case Dir4::E: return {1, 0};
        case Dir4::S: return {0, -1};
        case Dir4::W: return {-1, 0};
    }
    return {0, 0};
}

inline Coord offset(Dir8 d) {
    switch (d) {
        case Dir8::N:  return {0, 1};
        case Dir8::NE: return {1, 1};
        case Dir8::E:  return {1, 0};
        case Dir8::SE: return {1, -1};
        case Dir8::S:  return {0, -1};
        case Dir8::SW: return {-1, -1};
        case Dir8::W:  return {-1, 0};
        case Dir8::NW: return {-1, 1};
    }
    return {0, 0};
}

inline Coord step(Coord c, Dir4 d) {
    Coord o = offset(d);
    return {c.x + o.x, c.y + o.y};
}

inline Coord step(Coord c, Dir8 d) {
    Coord o = offset(d);
    return {c.x + o.x, c.y + o.y};
}

inline bool is_cardinal(Dir8 d) {
    return d == Dir8::N || d == Dir8::E || d == Dir8::S || d == Dir8::W;
}

inline Dir4 to_dir4(Dir8 d) {
    switch (d) {
        case Dir8::N: return Dir4::N;
        case Dir8::E: return Dir4::E;
        case Dir8::S: return Dir4::S;
        case Dir8::W: return Dir4::W;
        default: assert(false && "diagonal has no Dir4"); return Dir4::N;
    }
}

inline Dir8 to_dir8(Dir4 d) {
    switch (d) {
        case Dir4::N: return Dir8::N;
        case Dir4::E: return Dir8::E;
        case Dir4::S: return Dir8::S;
        case Dir4::W: return Dir8::W;
    }
    return Dir8::N;
}

inline Dir4 opposite(Dir4 d) {
    switch (d) {
        case Dir4::N: return Dir4::S;
        case Dir4::E: return Dir4::W;
        case Dir4::S: return Dir4::N;
        case Dir4::W: return Dir4::E;
    }
    return Dir4::N;
}

inline Dir8 opposite(Dir8 d) {
    return static_cast<Dir8>((static_cast<int>(d) + 4) % 8);
}

// Direction from a to a Moore-adjacent b.
inline std::optional<Dir8> dir8_between(Coord a, Coord b) {
    int dx = b.x - a.x, dy = b.y - a.y;
    if (dx == 0 && dy == 0) return std::nullopt;
    if (std::abs(dx) > 1 || std::abs(dy) > 1) return std::nullopt;
    if (dx == 0) return dy > 0 ? Dir8::N : Dir8::S;
    if (dy == 0) return dx > 0 ? Dir8::E : Dir8::W;
    if (dx > 0) return dy > 0 ? Dir8::NE : Dir8::SE;
    return dy > 0 ? Dir8::NW : Dir8::SW;
}

// A diagonal splits into a vertical then a horizontal cardinal step.
inline std::pair<Dir4, Dir4> decompose_diagonal(Dir8 d) {
    switch (d) {
        case Dir8::NE: return {Dir4::N, Dir4::E};
        case Dir8::SE: return {Dir4::S, Dir4::E};
        case Dir8::SW: return {Dir4::S, Dir4::W};
        case Dir8::NW: return {Dir4::N, Dir4::W};
        default: assert(false && "not a diagonal"); return {Dir4::N, Dir4::E};
    }
}

inline int hop_weight(Dir8 d) { return is_cardinal(d) ? 1 : 2; }

inline int manhattan_distance(Coord a, Coord b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

inline int chebyshev_distance(Coord a, Coord b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

// Fixed order: N, NE, E, SE, S, SW, W, NW.
inline std::array<Coord, 8> moore_neighbours(Coord c) {
    std::array<Coord, 8> out;
    for (int i = 0; i < 8; ++i) out[i] = step(c, static_cast<Dir8>(i));
    return out;
}

// Moore (8-neighbour) connectivity of an occupied set.
bool is_connected(const CoordSet& cells);

}  // namespace linepush
