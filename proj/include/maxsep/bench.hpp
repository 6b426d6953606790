#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "maxsep/geometry.hpp"

namespace maxsep {

struct BenchConfig {
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> seeds{1};
    std::size_t reps = 5;
    std::size_t reds = 1000;
    bool presorted = true;
};

struct BenchRow {
    std::size_t m = 0;
    double median_seconds = 0;
    std::vector<std::uint64_t> instance_hashes;  // one per seed
};

struct BenchReport {
    BenchConfig config;
    std::vector<BenchRow> rows;
    std::vector<double> doubling_ratios;  // rows[k] / rows[k-1]
    double noise_floor_seconds = 0;       // spread of repeated timings of the smallest size

    [[nodiscard]] std::string to_json() const;
    [[nodiscard]] std::string to_table() const;
};

[[nodiscard]] std::uint64_t instance_hash(const Instance& inst);
[[nodiscard]] Instance bench_instance(std::size_t n, std::size_t m, std::uint64_t seed, bool presorted);
[[nodiscard]] BenchReport run_benchmark(const BenchConfig& config);

}  // namespace maxsep
