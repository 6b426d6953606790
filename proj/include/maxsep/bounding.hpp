#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "maxsep/geometry.hpp"

namespace maxsep {

enum class Side : unsigned char { top = 0, right = 1, bottom = 2, left = 3 };
inline constexpr std::array<Side, 4> kSides{Side::top, Side::right, Side::bottom, Side::left};
std::string_view to_string(Side s);

enum class Quadrant : unsigned char { NE = 0, NW = 1, SW = 2, SE = 3 };
inline constexpr std::array<Quadrant, 4> kQuadrants{Quadrant::NE, Quadrant::NW, Quadrant::SW, Quadrant::SE};
std::string_view to_string(Quadrant q);

// Where the side of S_min comes to rest after sliding outward.
struct Wall {
    Coord value;
    Point support;
};

// Indexed by Side; nullopt marks an unbounded direction.
using SideBounds = std::array<std::optional<Wall>, 4>;

struct Frame {
    AxisRect smin;
    SideBounds sides;
    std::size_t forced_blue = 0;
    std::array<std::vector<Point>, 4> quadrants;  // indexed by Quadrant
    std::size_t on_smax_boundary = 0;               // includes the wall-defining strip points
    std::size_t outside = 0;

    [[nodiscard]] bool bounded() const;
    [[nodiscard]] std::vector<Side> unbounded_sides() const;
    [[nodiscard]] AxisRect smax() const;  // requires bounded()
    [[nodiscard]] std::size_t annulus_size() const;
};

[[nodiscard]] AxisRect compute_smin(const std::vector<Point>& reds);
[[nodiscard]] SideBounds compute_smax(const AxisRect& smin, const std::vector<Point>& blues);
[[nodiscard]] std::size_t count_forced(const AxisRect& smin, const std::vector<Point>& blues);

// Splits the blue points that can ever lie strictly inside a rectangle
// smin ⊆ S ⊆ smax into the four corner regions. Points on the smax boundary
// (the strip points among them) or outside smax never constrain a candidate
// and are only counted. Quadrant order follows the input order.
[[nodiscard]] Frame prune(const AxisRect& smin, const SideBounds& sides, const std::vector<Point>& blues);

[[nodiscard]] inline std::size_t index(Side s) { return static_cast<std::size_t>(s); }
[[nodiscard]] inline std::size_t index(Quadrant q) { return static_cast<std::size_t>(q); }

}  // namespace maxsep
