#pragma once

#include <compare>
#include <vector>

#include "maxsep/rational.hpp"

namespace maxsep {

using Coord = Rational;

struct Point {
    Coord x;
    Coord y;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Closed axis-aligned rectangle; zero width or height is allowed.
struct AxisRect {
    Coord xmin;
    Coord ymin;
    Coord xmax;
    Coord ymax;

    friend bool operator==(const AxisRect&, const AxisRect&) = default;
    friend auto operator<=>(const AxisRect&, const AxisRect&) = default;

    [[nodiscard]] Coord width() const { return xmax - xmin; }
    [[nodiscard]] Coord height() const { return ymax - ymin; }
    [[nodiscard]] bool valid() const { return xmin <= xmax && ymin <= ymax; }
};

struct Instance {
    std::vector<Point> reds;
    std::vector<Point> blues;
};

[[nodiscard]] Coord rect_area(const AxisRect& r);
[[nodiscard]] bool contains_closed(const AxisRect& r, const Point& p);
[[nodiscard]] bool strictly_inside(const AxisRect& r, const Point& p);
// r ⊆ outer, both closed.
[[nodiscard]] bool rect_contains(const AxisRect& outer, const AxisRect& r);

}  // namespace maxsep
