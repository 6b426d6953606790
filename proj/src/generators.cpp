#include "maxsep/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace maxsep {

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + v % span);
}

Instance gen_random(std::size_t n, std::size_t m, std::uint64_t seed, std::int64_t lo, std::int64_t hi) {
    if (n < 1) throw std::invalid_argument("gen_random needs at least one red point");
    if (lo > hi) throw std::invalid_argument("gen_random: empty coordinate range");
    Rng rng(seed);
    Instance inst;
    inst.reds.reserve(n);
    inst.blues.reserve(m);
    for (std::size_t i = 0; i < n; ++i) inst.reds.push_back({rng.uniform(lo, hi), rng.uniform(lo, hi)});
    for (std::size_t i = 0; i < m; ++i) inst.blues.push_back({rng.uniform(lo, hi), rng.uniform(lo, hi)});
    return inst;
}

Instance gen_clustered(std::size_t n, std::size_t m, std::uint64_t seed, std::int64_t red_half,
                       std::int64_t blue_half) {
    if (n < 1) throw std::invalid_argument("gen_clustered needs at least one red point");
    Rng rng(seed);
    Instance inst;
    inst.reds.reserve(n);
    inst.blues.reserve(m);
    for (std::size_t i = 0; i < n; ++i)
        inst.reds.push_back({rng.uniform(-red_half, red_half), rng.uniform(-red_half, red_half)});
    for (std::size_t i = 0; i < m; ++i)
        inst.blues.push_back({rng.uniform(-blue_half, blue_half), rng.uniform(-blue_half, blue_half)});
    return inst;
}

Instance gen_omega_m(std::size_t m, const Coord& x0, const Coord& y0) {
    if (m < 6) throw std::invalid_argument("gen_omega_m needs m >= 6");
    if (x0 <= 0 || y0 <= 0) throw std::invalid_argument("gen_omega_m needs x0, y0 > 0");
    const auto mm = static_cast<std::int64_t>(m);
    const Coord start = Coord(-3) * x0 / 2;
    const Coord step = (Coord(3) * x0 / 2) / Coord(mm - 1);
    // x[0] is the virtual abscissa used to place y_1.
    std::vector<Coord> x(m - 1);
    for (std::int64_t i = 0; i < mm - 1; ++i) x[static_cast<std::size_t>(i)] = start + Coord(i) * step;
    std::vector<Coord> y(m - 1);
    for (std::size_t i = 1; i + 1 < m; ++i) y[i] = y0 / 2 - x0 * y0 / (x0 / 2 - x[i - 1]);

    Instance inst;
    inst.blues.push_back({x0 / 4, y0 / 2});  // p
    inst.blues.push_back({x0 / 2, y0 / 4});  // q
    for (std::size_t i = 1; i + 1 < m; ++i) inst.blues.push_back({x[i], y[i]});
    inst.reds.push_back({x0 / 2, 0});
    inst.reds.push_back({0, y0 / 2});
    inst.reds.push_back({x[m - 3], 0});
    inst.reds.push_back({0, y[2]});
    return inst;
}

Instance gen_fap(const std::vector<Coord>& values) {
    if (values.size() < 3) throw std::invalid_argument("gen_fap needs at least three values");
    std::vector<Coord> a = values;
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw std::invalid_argument("gen_fap: duplicate value");
    if (a.front() < 0 || a.back() > 1) throw std::invalid_argument("gen_fap: values must lie in [0, 1]");

    Instance inst;
    for (const Coord& v : values) {
        const Coord h = Coord(1) / (Coord(1) + v);
        inst.blues.push_back({v, h});
        inst.blues.push_back({-v, -h});
    }
    const Coord& second = a[1];
    const Coord h = Coord(1) / (Coord(1) + a[a.size() - 2]);
    inst.reds = {{0, 0}, {second, 0}, {0, h}, {-second, 0}, {0, -h}};
    return inst;
}

std::pair<Coord, Coord> fap_by_sorting(std::vector<Coord> values) {
    if (values.size() < 2) throw std::invalid_argument("fap_by_sorting needs at least two values");
    std::sort(values.begin(), values.end());
    std::size_t best = 0;
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
        if (values[i + 1] - values[i] > values[best + 1] - values[best]) best = i;
    return {values[best], values[best + 1]};
}

std::pair<Coord, Coord> fap_from_solution(const Solution& sol) {
    if (sol.status != Status::bounded) throw std::invalid_argument("fap_from_solution: unbounded solution");
    const Coord& top = sol.best.rect.ymax;
    if (top <= 0) throw std::invalid_argument("fap_from_solution: not a gen_fap optimum");
    return {Coord(1) / top - 1, sol.best.rect.xmax};
}

std::vector<Coord> random_fap_values(std::size_t count, std::uint64_t seed, std::int64_t denominator) {
    if (denominator < 1 || count > static_cast<std::size_t>(denominator) + 1)
        throw std::invalid_argument("random_fap_values: not enough distinct values");
    Rng rng(seed);
    std::set<std::int64_t> used;
    std::vector<Coord> out;
    while (out.size() < count) {
        const std::int64_t k = rng.uniform(0, denominator);
        if (used.insert(k).second) out.emplace_back(k, denominator);
    }
    return out;
}

}  // namespace maxsep
