#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "maxsep/geometry.hpp"
#include "maxsep/oracle.hpp"
#include "maxsep/solver.hpp"

namespace testing {

using maxsep::AxisRect;
using maxsep::Coord;
using maxsep::Instance;
using maxsep::Point;

inline Point P(Coord x, Coord y) { return {x, y}; }
inline AxisRect R(Coord xmin, Coord ymin, Coord xmax, Coord ymax) { return {xmin, ymin, xmax, ymax}; }
inline Coord Q(std::int64_t n, std::int64_t d) { return Coord(n, d); }

inline Instance instance_w() {
    return {{P(0, 0), P(2, 0), P(1, 1), P(1, -1)}, {P(1, 3), P(1, -3), P(4, 0), P(-2, 0), P(3, 2)}};
}

// Feasible: all reds in the closed rectangle and exactly `forced` blues in
// its open interior. Maximal: every side sits on an smax wall or has a blue
// point in the open extent of that side.
inline bool feasible(const AxisRect& r, const Instance& inst, std::size_t forced) {
    for (const auto& p : inst.reds)
        if (!maxsep::contains_closed(r, p)) return false;
    return maxsep::count_open_interior(r, inst.blues) == forced;
}

inline bool side_blocked(const AxisRect& r, const AxisRect& smax, const Instance& inst, maxsep::Side s) {
    using maxsep::Side;
    auto between = [](const Coord& v, const Coord& a, const Coord& b) { return a < v && v < b; };
    switch (s) {
        case Side::top:
            if (r.ymax == smax.ymax) return true;
            return std::any_of(inst.blues.begin(), inst.blues.end(),
                               [&](const Point& p) { return p.y == r.ymax && between(p.x, r.xmin, r.xmax); });
        case Side::bottom:
            if (r.ymin == smax.ymin) return true;
            return std::any_of(inst.blues.begin(), inst.blues.end(),
                               [&](const Point& p) { return p.y == r.ymin && between(p.x, r.xmin, r.xmax); });
        case Side::right:
            if (r.xmax == smax.xmax) return true;
            return std::any_of(inst.blues.begin(), inst.blues.end(),
                               [&](const Point& p) { return p.x == r.xmax && between(p.y, r.ymin, r.ymax); });
        case Side::left:
            if (r.xmin == smax.xmin) return true;
            return std::any_of(inst.blues.begin(), inst.blues.end(),
                               [&](const Point& p) { return p.x == r.xmin && between(p.y, r.ymin, r.ymax); });
    }
    return false;
}

inline bool maximal(const AxisRect& r, const AxisRect& smax, const Instance& inst) {
    for (auto s : maxsep::kSides)
        if (!side_blocked(r, smax, inst, s)) return false;
    return true;
}

}  // namespace testing
