#include "maxsep/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "json.hpp"
#include "maxsep/generators.hpp"
#include "maxsep/solver.hpp"

namespace maxsep {

namespace {

constexpr std::int64_t kBlueHalf = 100'000'000;
// Expected blue points per side strip; keeps the annulus populated at every m.
constexpr std::int64_t kStripPoints = 32;

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

std::uint64_t fnv(std::uint64_t h, std::int64_t v) {
    auto u = static_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
        h ^= (u >> (8 * b)) & 0xFF;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv_points(std::uint64_t h, const std::vector<Point>& pts) {
    h = fnv(h, static_cast<std::int64_t>(pts.size()));
    for (const auto& p : pts) {
        h = fnv(h, p.x.num());
        h = fnv(h, p.x.den());
        h = fnv(h, p.y.num());
        h = fnv(h, p.y.den());
    }
    return h;
}

}  // namespace

std::uint64_t instance_hash(const Instance& inst) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv_points(h, inst.reds);
    return fnv_points(h, inst.blues);
}

Instance bench_instance(std::size_t n, std::size_t m, std::uint64_t seed, bool presorted) {
    // Reds fill a box whose side strips hold about kStripPoints blues each.
    const auto red_half = std::max<std::int64_t>(1, kBlueHalf * 2 * kStripPoints / std::max<std::int64_t>(1, static_cast<std::int64_t>(m)));
    Instance inst = gen_clustered(n, m, seed, std::min(red_half, kBlueHalf), kBlueHalf);
    if (presorted)
        std::stable_sort(inst.blues.begin(), inst.blues.end(),
                         [](const Point& a, const Point& b) { return a.x < b.x; });
    return inst;
}

BenchReport run_benchmark(const BenchConfig& config) {
    BenchReport report;
    report.config = config;
    const SolveOptions opt{.presorted = config.presorted};
    std::vector<double> smallest;
    volatile std::size_t sink = 0;  // keeps the solve observable
    for (std::size_t m : config.sizes) {
        BenchRow row;
        row.m = m;
        std::vector<double> times;
        for (std::uint64_t seed : config.seeds) {
            const Instance inst = bench_instance(config.reds, m, seed, config.presorted);
            row.instance_hashes.push_back(instance_hash(inst));
            for (std::size_t r = 0; r < std::max<std::size_t>(config.reps, 1); ++r) {
                const auto t0 = std::chrono::steady_clock::now();
                const Solution sol = solve_one(inst, opt);
                const auto t1 = std::chrono::steady_clock::now();
                sink = sink + sol.stats.annulus;
                times.push_back(std::chrono::duration<double>(t1 - t0).count());
            }
        }
        row.median_seconds = median(times);
        if (report.rows.empty()) smallest = times;
        report.rows.push_back(std::move(row));
    }
    for (std::size_t k = 1; k < report.rows.size(); ++k)
        report.doubling_ratios.push_back(report.rows[k].median_seconds /
                                         std::max(report.rows[k - 1].median_seconds, 1e-12));
    if (!smallest.empty()) {
        const auto [lo, hi] = std::minmax_element(smallest.begin(), smallest.end());
        report.noise_floor_seconds = *hi - *lo;
    }
    return report;
}

std::string BenchReport::to_json() const {
    nlohmann::json j;
    j["presorted"] = config.presorted;
    j["reds"] = config.reds;
    j["reps"] = config.reps;
    j["seeds"] = config.seeds;
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json hashes = nlohmann::json::array();
        for (auto h : r.instance_hashes) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
            hashes.push_back(buf);
        }
        rs.push_back({{"m", r.m}, {"median_seconds", r.median_seconds}, {"instance_hashes", hashes}});
    }
    j["rows"] = rs;
    j["doubling_ratios"] = doubling_ratios;
    j["noise_floor_seconds"] = noise_floor_seconds;
    return j.dump(2) + "\n";
}

std::string BenchReport::to_table() const {
    std::string out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%12s %14s %10s\n", "m", "median_s", "ratio");
    out += buf;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k == 0)
            std::snprintf(buf, sizeof buf, "%12zu %14.6f %10s\n", rows[k].m, rows[k].median_seconds, "-");
        else
            std::snprintf(buf, sizeof buf, "%12zu %14.6f %10.3f\n", rows[k].m, rows[k].median_seconds,
                          doubling_ratios[k - 1]);
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "noise floor %.6f s (%s input)\n", noise_floor_seconds,
                  config.presorted ? "presorted" : "unsorted");
    out += buf;
    return out;
}

}  // namespace maxsep
