#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "maxsep/geometry.hpp"

namespace maxsep {

// Implicit Case-3 area matrix. Row i is an adjacent pair of the top-right
// staircase (top, right), column j an adjacent pair of the bottom-left one
// (left, bottom). Row i is defined on columns [first[i], last[i]]; an empty
// window has first > last. Windows are non-increasing in i.
struct StaircaseMatrix {
    std::vector<Coord> top, right;    // per row
    std::vector<Coord> left, bottom;  // per column
    std::vector<std::ptrdiff_t> first, last;

    [[nodiscard]] std::size_t rows() const { return top.size(); }
    [[nodiscard]] std::size_t cols() const { return left.size(); }
    [[nodiscard]] bool defined(std::size_t i, std::size_t j) const {
        const auto jj = static_cast<std::ptrdiff_t>(j);
        return first[i] <= jj && jj <= last[i];
    }
    [[nodiscard]] Coord area(std::size_t i, std::size_t j) const {
        return (top[i] - bottom[j]) * (right[i] - left[j]);
    }
};

struct RowMax {
    std::ptrdiff_t col = -1;  // -1: row has no defined entry (exact search only)
    Coord value;
};

struct EvalCounter {
    std::uint64_t evaluations = 0;
};

// Area inside the window, 0 left of it, last[i] - j right of it.
[[nodiscard]] Coord padded_entry(const StaircaseMatrix& m, std::size_t i, std::size_t j);

// SMAWK over the padded matrix. Exact when the padded matrix satisfies
//   i < k, j < l:  M(k,j) <= M(k,l)  =>  M(i,j) <= M(i,l)
// and returns the rightmost maximum of every row.
[[nodiscard]] std::vector<RowMax> row_maxima(const StaircaseMatrix& m, EvalCounter* counter = nullptr);

// Exhaustive scan of the padded matrix with the same tie rule.
[[nodiscard]] std::vector<RowMax> row_maxima_scan(const StaircaseMatrix& m);

// Exhaustive scan over defined entries only.
[[nodiscard]] std::vector<RowMax> window_maxima_scan(const StaircaseMatrix& m);

// Exact rightmost maxima over each row's window. The defined part of a
// Case-3 matrix is inverse Monge, so the band is cut into fully defined
// blocks (each searched with SMAWK) by halving rows; O((rows+cols) log^2).
[[nodiscard]] std::vector<RowMax> window_maxima(const StaircaseMatrix& m, EvalCounter* counter = nullptr);

[[nodiscard]] bool verify_total_inverse_monotone(const StaircaseMatrix& m);
[[nodiscard]] bool verify_total_inverse_monotone(const std::vector<std::vector<Coord>>& dense);

// Rightmost row maxima of a rows x cols matrix given by value(i, j), which
// must satisfy the implication above. Returns the column per row.
template <class Value>
std::vector<std::size_t> smawk_rightmost(std::size_t rows, std::size_t cols, const Value& value);

}  // namespace maxsep

#include "maxsep/detail/smawk.hpp"
