#include "maxsep/matrix_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxsep {

Coord padded_entry(const StaircaseMatrix& m, std::size_t i, std::size_t j) {
    if (i >= m.rows() || j >= m.cols()) throw std::out_of_range("padded_entry index out of range");
    const auto jj = static_cast<std::ptrdiff_t>(j);
    if (jj > m.last[i]) return Coord(m.last[i] - jj);
    if (jj < m.first[i]) return Coord(0);
    return m.area(i, j);
}

namespace {

void offer(RowMax& cur, std::ptrdiff_t col, const Coord& v) {
    if (cur.col < 0 || v > cur.value || (v == cur.value && col > cur.col)) {
        cur.col = col;
        cur.value = v;
    }
}

}  // namespace

std::vector<RowMax> row_maxima(const StaircaseMatrix& m, EvalCounter* counter) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<RowMax> out(rows);
    if (rows == 0 || cols == 0) return out;
    auto value = [&](std::size_t i, std::size_t j) {
        if (counter) ++counter->evaluations;
        return padded_entry(m, i, j);
    };
    const auto arg = smawk_rightmost(rows, cols, value);
    for (std::size_t i = 0; i < rows; ++i) {
        out[i].col = static_cast<std::ptrdiff_t>(arg[i]);
        out[i].value = padded_entry(m, i, arg[i]);
    }
    return out;
}

std::vector<RowMax> row_maxima_scan(const StaircaseMatrix& m) {
    std::vector<RowMax> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) offer(out[i], static_cast<std::ptrdiff_t>(j), padded_entry(m, i, j));
    return out;
}

std::vector<RowMax> window_maxima_scan(const StaircaseMatrix& m) {
    std::vector<RowMax> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.defined(i, j)) offer(out[i], static_cast<std::ptrdiff_t>(j), m.area(i, j));
    return out;
}

namespace {

// Rows [r0, r1) and inclusive column ranges throughout.
class BandSearch {
public:
    BandSearch(const StaircaseMatrix& m, EvalCounter* counter) : m_(m), counter_(counter), out_(m.rows()) {}

    std::vector<RowMax> run() {
        band(0, m_.rows(), 0, static_cast<std::ptrdiff_t>(m_.cols()) - 1);
        return std::move(out_);
    }

private:
    using idx = std::ptrdiff_t;

    // Fully defined block. The defined part satisfies
    //   M(i,j) <= M(i,l)  =>  M(k,j) <= M(k,l)   (i < k, j < l),
    // so reading its rows bottom-up gives the form smawk_rightmost expects.
    void block(std::size_t ra, std::size_t rb, idx ca, idx cb) {
        const std::size_t nr = rb - ra + 1;
        const auto nc = static_cast<std::size_t>(cb - ca + 1);
        auto value = [&](std::size_t bi, std::size_t bj) {
            if (counter_) ++counter_->evaluations;
            return m_.area(rb - bi, static_cast<std::size_t>(ca) + bj);
        };
        const auto arg = smawk_rightmost(nr, nc, value);
        for (std::size_t bi = 0; bi < nr; ++bi) {
            const std::size_t i = rb - bi;
            const std::size_t j = static_cast<std::size_t>(ca) + arg[bi];
            offer(out_[i], static_cast<idx>(j), m_.area(i, j));
        }
    }

    // Rows whose window inside [a, b] is [max(first, a), b].
    void left_sided(std::size_t r0, std::size_t r1, idx a, idx b) {
        if (r0 >= r1 || a > b) return;
        const std::size_t r = r0 + (r1 - r0) / 2;
        const idx fa = std::max(m_.first[r], a);
        if (fa > b) {
            left_sided(r + 1, r1, a, b);
            return;
        }
        block(r, r1 - 1, fa, b);
        left_sided(r0, r, fa, b);
        left_sided(r + 1, r1, a, fa - 1);
    }

    // Rows whose window inside [a, b] is [a, min(last, b)].
    void right_sided(std::size_t r0, std::size_t r1, idx a, idx b) {
        if (r0 >= r1 || a > b) return;
        const std::size_t r = r0 + (r1 - r0) / 2;
        const idx lb = std::min(m_.last[r], b);
        if (lb < a) {
            right_sided(r0, r, a, b);
            return;
        }
        block(r0, r, a, lb);
        right_sided(r0, r, lb + 1, b);
        right_sided(r + 1, r1, a, lb);
    }

    void band(std::size_t r0, std::size_t r1, idx c0, idx c1) {
        if (r0 >= r1 || c0 > c1) return;
        const std::size_t r = r0 + (r1 - r0) / 2;
        const idx a = std::max(m_.first[r], c0);
        const idx b = std::min(m_.last[r], c1);
        if (a > b) {
            band(r0, r, std::max(c0, m_.first[r]), c1);
            band(r + 1, r1, c0, std::min(c1, m_.last[r]));
            return;
        }
        left_sided(r0, r, a, b);
        right_sided(r, r1, a, b);
        band(r0, r, b + 1, c1);
        band(r + 1, r1, c0, a - 1);
    }

    const StaircaseMatrix& m_;
    EvalCounter* counter_;
    std::vector<RowMax> out_;
};

template <class Value>
bool inverse_monotone(std::size_t rows, std::size_t cols, const Value& v) {
    for (std::size_t k = 1; k < rows; ++k)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 1; l < cols; ++l)
                for (std::size_t j = 0; j < l; ++j)
                    if (v(k, j) <= v(k, l) && !(v(i, j) <= v(i, l))) return false;
    return true;
}

}  // namespace

std::vector<RowMax> window_maxima(const StaircaseMatrix& m, EvalCounter* counter) {
    return BandSearch(m, counter).run();
}

bool verify_total_inverse_monotone(const std::vector<std::vector<Coord>>& dense) {
    const std::size_t rows = dense.size();
    const std::size_t cols = rows == 0 ? 0 : dense.front().size();
    return inverse_monotone(rows, cols, [&](std::size_t i, std::size_t j) -> const Coord& { return dense[i][j]; });
}

bool verify_total_inverse_monotone(const StaircaseMatrix& m) {
    std::vector<std::vector<Coord>> dense(m.rows(), std::vector<Coord>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) dense[i][j] = padded_entry(m, i, j);
    return verify_total_inverse_monotone(dense);
}

}  // namespace maxsep
