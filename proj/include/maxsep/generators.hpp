#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "maxsep/geometry.hpp"
#include "maxsep/solver.hpp"

namespace maxsep {

// Deterministic for a given seed on every platform (no std distributions).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive

private:
    std::uint64_t state_;
};

// Integer coordinates in [lo, hi]^2; small ranges force ties on purpose.
[[nodiscard]] Instance gen_random(std::size_t n, std::size_t m, std::uint64_t seed, std::int64_t lo, std::int64_t hi);

// Reds in [-red_half, red_half]^2, blues in [-blue_half, blue_half]^2.
[[nodiscard]] Instance gen_clustered(std::size_t n, std::size_t m, std::uint64_t seed, std::int64_t red_half,
                                     std::int64_t blue_half);

// Adversarial family with a linear number of optima: walls p, q on the smin
// edges and a SW chain r_1..r_{m-2} whose adjacent pairs all reach x0 * y0.
[[nodiscard]] Instance gen_omega_m(std::size_t m, const Coord& x0, const Coord& y0);

// The furthest-adjacent-pair construction: p_i = (a_i, 1/(1+a_i)) and its
// mirror q_i, with reds at the origin and four points fixing smin.
[[nodiscard]] Instance gen_fap(const std::vector<Coord>& values);

// Adjacent pair of the sorted values with the largest gap, leftmost on ties.
[[nodiscard]] std::pair<Coord, Coord> fap_by_sorting(std::vector<Coord> values);

// Reads (a_i, a_j) back from a rectangle of a gen_fap instance: its top lies
// at 1/(1+a_i) and its right side at a_j.
[[nodiscard]] std::pair<Coord, Coord> fap_from_solution(const Solution& sol);

// `count` distinct values k/denominator in [0, 1], in random order.
[[nodiscard]] std::vector<Coord> random_fap_values(std::size_t count, std::uint64_t seed,
                                                   std::int64_t denominator = 1000);

}  // namespace maxsep
