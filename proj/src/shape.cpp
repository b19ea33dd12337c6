#include "linepush/shape.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace linepush {

std::vector<Coord> parse_shape(const std::string& text) {
    std::vector<Coord> cells;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long x, y;
        if (!(ls >> x >> y))
            throw SimError("parse error at line " + std::to_string(lineno) + ": " + line);
        std::string rest;
        if (ls >> rest && rest[0] != '#')
            throw SimError("trailing junk at line " + std::to_string(lineno) + ": " + line);
        cells.push_back({static_cast<int>(x), static_cast<int>(y)});
    }
    if (cells.empty()) throw SimError("shape file holds no cells");
    // validate as a path: Configuration's constructor enforces the same
    // rules; duplicated here so parse errors do not depend on sim state
    CoordSet seen;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (!seen.insert(cells[i]).second)
            throw SimError("duplicate cell " + std::to_string(cells[i].x) + " " +
                           std::to_string(cells[i].y));
        if (i > 0 && chebyshev_distance(cells[i - 1], cells[i]) != 1)
            throw SimError("cells " + std::to_string(i - 1) + " and " + std::to_string(i) +
                           " are not Moore-adjacent");
    }
    return cells;
}

std::vector<Coord> read_shape(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SimError("cannot open shape file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_shape(buf.str());
}

std::string serialize_shape(const std::vector<Coord>& cells) {
    std::ostringstream out;
    for (const auto& c : cells) out << c.x << ' ' << c.y << '\n';
    return out.str();
}

void write_shape(const std::string& path, const std::vector<Coord>& cells) {
    std::ofstream f(path);
    if (!f) throw SimError("cannot open output file: " + path);
    f << serialize_shape(cells);
}

std::vector<Coord> gen_diagonal(int n) {
    if (n < 1) throw SimError("n must be >= 1");
    std::vector<Coord> cells;
    for (int i = 0; i < n; ++i) cells.push_back({i, i});
    return cells;
}

std::vector<Coord> gen_staircase(int n, int run) {
    if (n < 1 || run < 1) throw SimError("n and run must be >= 1");
    std::vector<Coord> cells;
    Coord c{0, 0};
    cells.push_back(c);
    int k = 0;
    while (static_cast<int>(cells.size()) < n) {
        if (run > 1 && k % run != run - 1)
            ++c.x;
        else
            ++c.y;
        ++k;
        cells.push_back(c);
    }
    return cells;
}

std::vector<Coord> gen_spiral(int n) {
    if (n < 1) throw SimError("n must be >= 1");
    // square spiral from the centre outward so the anchor ends on the rim
    std::vector<Coord> cells;
    Coord c{0, 0};
    cells.push_back(c);
    static const Dir4 dirs[4] = {Dir4::E, Dir4::N, Dir4::W, Dir4::S};
    int leg = 1, d = 0;
    while (static_cast<int>(cells.size()) < n) {
        for (int rep = 0; rep < 2 && static_cast<int>(cells.size()) < n; ++rep) {
            for (int s = 0; s < leg && static_cast<int>(cells.size()) < n; ++s) {
                c = step(c, dirs[d]);
                cells.push_back(c);
            }
            d = (d + 1) % 4;
        }
        ++leg;
    }
    return cells;
}

namespace {

// a straight cardinal run of n-1 free cells next to the anchor must exist,
// or the top-level target placement is impossible
bool anchor_ray_free(const std::vector<Coord>& cells) {
    if (cells.size() <= 1) return true;
    CoordSet occ(cells.begin(), cells.end());
    const Coord a = cells.back();
    for (Dir4 u : {Dir4::E, Dir4::N, Dir4::W, Dir4::S}) {
        bool free_run = true;
        Coord c = a;
        for (size_t k = 1; k < cells.size(); ++k) {
            c = step(c, u);
            if (occ.count(c)) {
                free_run = false;
                break;
            }
        }
        if (free_run) return true;
    }
    return false;
}

std::vector<Coord> random_walk_attempt(int n, std::mt19937_64& rng) {
    std::vector<Coord> cells{{0, 0}};
    CoordSet occ{{0, 0}};
    // per-cell candidate orders are fixed up front so backtracking is cheap
    std::vector<std::vector<Coord>> untried;
    auto push_candidates = [&](Coord c) {
        auto nb = moore_neighbours(c);
        // mild outward drift: prefer steps that grow the Chebyshev radius,
        // which keeps the walk from coiling around its own anchor
        // candidates are popped from the back, so sort ascending
        std::stable_sort(nb.begin(), nb.end(), [&](Coord a, Coord b) {
            int ra = std::max(std::abs(a.x), std::abs(a.y));
            int rb = std::max(std::abs(b.x), std::abs(b.y));
            return ra < rb;
        });
        // random tie-break among the preferred group
        std::shuffle(nb.end() - 3, nb.end(), rng);
        untried.push_back({nb.begin(), nb.end()});
    };
    push_candidates({0, 0});
    long budget = 100L * n;
    while (static_cast<int>(cells.size()) < n && budget-- > 0) {
        auto& cand = untried.back();
        bool advanced = false;
        while (!cand.empty()) {
            Coord next = cand.back();
            cand.pop_back();
            if (occ.count(next)) continue;
            cells.push_back(next);
            occ.insert(next);
            push_candidates(next);
            advanced = true;
            break;
        }
        if (!advanced) {
            if (cells.size() <= 1) break;
            occ.erase(cells.back());
            cells.pop_back();
            untried.pop_back();
        }
    }
    if (static_cast<int>(cells.size()) != n) cells.clear();
    return cells;
}

}  // namespace

std::vector<Coord> gen_random(int n, uint64_t seed) {
    if (n < 1) throw SimError("n must be >= 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        auto cells = random_walk_attempt(n, rng);
        if (!cells.empty() && anchor_ray_free(cells)) return cells;
    }
    throw GenerationFailed("random shape generation exhausted retries for n=" +
                           std::to_string(n) + " seed=" + std::to_string(seed));
}

}  // namespace linepush
