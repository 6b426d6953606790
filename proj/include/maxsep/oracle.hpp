#pragma once

#include <cstddef>
#include <vector>

#include "maxsep/geometry.hpp"
#include "maxsep/solver.hpp"

namespace maxsep {

[[nodiscard]] std::size_t count_open_interior(const AxisRect& rect, const std::vector<Point>& blues);

// Brute force over every rectangle whose sides lie on blue coordinates or on
// the smax walls. Intended for m up to a few dozen.
[[nodiscard]] Solution oracle_best(const Instance& inst);

// All maximal rectangles of oracle_best's area (or all maximal ones), sorted.
// Throws UnboundedError.
[[nodiscard]] std::vector<AxisRect> oracle_all(const Instance& inst, bool all_maximal = false);

}  // namespace maxsep
