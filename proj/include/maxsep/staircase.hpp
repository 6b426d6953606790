#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "maxsep/bounding.hpp"

namespace maxsep {

// Dominance-minimal points of one quadrant ordered by x, framed by two
// sentinels standing for the adjacent smax walls. Entry 0 and the last entry
// are always the sentinels.
//
//   quadrant  y along the order   leading sentinel    trailing sentinel
//   NE        decreasing          (smin.R, smax.T)    (smax.R, smin.T)
//   NW        increasing          (smax.L, smin.T)    (smin.L, smax.T)
//   SW        decreasing          (smax.L, smin.B)    (smin.L, smax.B)
//   SE        increasing          (smin.R, smax.B)    (smax.R, smin.B)
struct Staircase {
    Quadrant quadrant = Quadrant::NE;
    std::vector<Point> entries;

    [[nodiscard]] std::size_t size() const { return entries.size(); }
    [[nodiscard]] bool is_sentinel(std::size_t i) const { return i == 0 || i + 1 == entries.size(); }
    [[nodiscard]] std::size_t real_count() const { return entries.size() - 2; }
    [[nodiscard]] std::optional<std::size_t> prev(std::size_t i) const {
        return i == 0 ? std::nullopt : std::optional<std::size_t>(i - 1);
    }
    [[nodiscard]] std::optional<std::size_t> next(std::size_t i) const {
        return i + 1 >= entries.size() ? std::nullopt : std::optional<std::size_t>(i + 1);
    }
};

using Staircases = std::array<Staircase, 4>;  // indexed by Quadrant

// `points` must lie in the quadrant's corner region. With presorted_x the
// points are taken to be ordered by non-decreasing x and no sort is done.
[[nodiscard]] Staircase build_staircase(std::vector<Point> points, Quadrant q, const AxisRect& smin,
                                        const AxisRect& smax, bool presorted_x = false);
[[nodiscard]] Staircases build_staircases(const Frame& frame, bool presorted_x = false);

enum class Toward : unsigned char { below = 0, left = 1, above = 2, right = 3 };

// For every entry p of every staircase and every target quadrant q:
//   below_q(p)  highest entry of q strictly below p
//   left_q(p)   rightmost entry of q strictly left of p
//   above_q(p)  lowest entry of q strictly above p
//   right_q(p)  leftmost entry of q strictly right of p
// Ties (possible only against a sentinel) go to the entry nearer to smin.
class PointerTables {
public:
    static constexpr std::uint32_t none = 0xFFFFFFFFu;

    [[nodiscard]] std::optional<std::size_t> get(Quadrant from, std::size_t entry, Quadrant to, Toward dir) const {
        const std::uint32_t v = slots_[index(from)][entry][index(to)][static_cast<std::size_t>(dir)];
        return v == none ? std::nullopt : std::optional<std::size_t>(v);
    }

private:
    friend PointerTables precompute_pointers(const Staircases& st);
    using Slot = std::array<std::array<std::uint32_t, 4>, 4>;
    std::array<std::vector<Slot>, 4> slots_;
};

[[nodiscard]] PointerTables precompute_pointers(const Staircases& st);

// Reference implementation by full scan; used by tests.
[[nodiscard]] std::optional<std::size_t> scan_pointer(const Staircases& st, const Point& p, Quadrant to, Toward dir);

[[nodiscard]] inline bool is_east(Quadrant q) { return q == Quadrant::NE || q == Quadrant::SE; }
[[nodiscard]] inline bool is_north(Quadrant q) { return q == Quadrant::NE || q == Quadrant::NW; }

}  // namespace maxsep
