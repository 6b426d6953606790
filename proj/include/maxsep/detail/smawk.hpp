#pragma once

#include <cstddef>
#include <vector>

namespace maxsep {
namespace detail {

// Classic SMAWK for leftmost row maxima whose positions are non-decreasing
// (M(i,a) < M(i,b) => M(k,a) < M(k,b) for i < k, a < b).
template <class Value>
void smawk_leftmost(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols, const Value& value,
                    std::vector<std::size_t>& best) {
    if (rows.empty()) return;

    // Reduce: drop columns that cannot hold a leftmost maximum.
    std::vector<std::size_t> kept;
    kept.reserve(rows.size());
    for (std::size_t c : cols) {
        while (!kept.empty()) {
            const std::size_t r = rows[kept.size() - 1];
            if (value(r, kept.back()) >= value(r, c)) break;
            kept.pop_back();
        }
        if (kept.size() < rows.size()) kept.push_back(c);
    }

    std::vector<std::size_t> odd;
    odd.reserve(rows.size() / 2);
    for (std::size_t k = 1; k < rows.size(); k += 2) odd.push_back(rows[k]);
    smawk_leftmost(odd, kept, value, best);

    // Interpolate the even rows between their neighbours' answers.
    std::size_t from = 0;
    for (std::size_t k = 0; k < rows.size(); k += 2) {
        std::size_t to = kept.size() - 1;
        if (k + 1 < rows.size()) {
            to = from;
            while (kept[to] != best[rows[k + 1]]) ++to;
        }
        const std::size_t r = rows[k];
        std::size_t arg = kept[from];
        auto top = value(r, arg);
        for (std::size_t p = from + 1; p <= to; ++p) {
            auto v = value(r, kept[p]);
            if (v > top) {
                top = std::move(v);
                arg = kept[p];
            }
        }
        best[r] = arg;
        from = to;
    }
}

}  // namespace detail

template <class Value>
std::vector<std::size_t> smawk_rightmost(std::size_t rows, std::size_t cols, const Value& value) {
    std::vector<std::size_t> best(rows, 0);
    if (rows == 0 || cols == 0) return best;
    // Reversing the columns turns the rightmost, non-increasing maxima into
    // leftmost, non-decreasing ones.
    std::vector<std::size_t> r(rows);
    std::vector<std::size_t> c(cols);
    for (std::size_t i = 0; i < rows; ++i) r[i] = i;
    for (std::size_t j = 0; j < cols; ++j) c[j] = j;
    auto flipped = [&](std::size_t i, std::size_t j) { return value(i, cols - 1 - j); };
    detail::smawk_leftmost(r, c, flipped, best);
    for (auto& b : best) b = cols - 1 - b;
    return best;
}

}  // namespace maxsep
