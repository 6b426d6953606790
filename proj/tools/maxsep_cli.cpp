#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "maxsep/bench.hpp"
#include "maxsep/generators.hpp"
#include "maxsep/io.hpp"
#include "maxsep/oracle.hpp"
#include "maxsep/solver.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kUnbounded = 3;
constexpr int kBadArgs = 4;

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

maxsep::Format parse_format(const std::string& f) {
    if (f == "json") return maxsep::Format::json;
    if (f == "tsv") return maxsep::Format::tsv;
    return maxsep::Format::svg;
}

struct SolveArgs {
    std::string input = "-";
    std::string format = "json";
    bool all = false;
    bool all_maximal = false;
    bool presorted = false;
    bool require_bounded = false;
};

int run_solve(const SolveArgs& a) {
    const maxsep::Instance inst = maxsep::parse_points(slurp(a.input));
    const auto fmt = parse_format(a.format);
    if (a.all || a.all_maximal) {
        try {
            const auto rects = maxsep::solve_all(inst, {.all_maximal = a.all_maximal});
            std::cout << maxsep::emit_all(rects, fmt, &inst);
        } catch (const maxsep::UnboundedError& e) {
            maxsep::Solution sol;
            sol.status = maxsep::Status::unbounded;
            sol.unbounded = e.sides();
            std::cout << maxsep::emit_solution(sol, fmt, &inst);
            return a.require_bounded ? kUnbounded : kOk;
        }
        return kOk;
    }
    const auto sol = maxsep::solve_one(inst, {.presorted = a.presorted});
    std::cout << maxsep::emit_solution(sol, fmt, &inst);
    return sol.status == maxsep::Status::unbounded && a.require_bounded ? kUnbounded : kOk;
}

struct GenArgs {
    std::string kind = "random";
    std::size_t n = 5;
    std::size_t m = 10;
    std::uint64_t seed = 1;
    std::int64_t lo = -10;
    std::int64_t hi = 10;
    std::string x0 = "1";
    std::string y0 = "1";
    std::vector<std::string> values;
    std::size_t count = 0;
};

int run_gen(const GenArgs& a) {
    maxsep::Instance inst;
    if (a.kind == "random") {
        inst = maxsep::gen_random(a.n, a.m, a.seed, a.lo, a.hi);
    } else if (a.kind == "omega-m") {
        inst = maxsep::gen_omega_m(a.m, maxsep::Coord::parse(a.x0), maxsep::Coord::parse(a.y0));
    } else {
        std::vector<maxsep::Coord> vals;
        for (const auto& v : a.values) vals.push_back(maxsep::Coord::parse(v));
        if (vals.empty()) vals = maxsep::random_fap_values(a.count ? a.count : 10, a.seed);
        inst = maxsep::gen_fap(vals);
    }
    std::cout << maxsep::dump_instance(inst);
    return kOk;
}

struct BenchArgs {
    std::vector<std::size_t> sizes{1 << 16, 1 << 17, 1 << 18};
    std::vector<std::uint64_t> seeds{1};
    std::size_t reps = 5;
    std::size_t reds = 1000;
    bool presorted = false;
    bool json = false;
};

int run_bench(const BenchArgs& a) {
    const auto report = maxsep::run_benchmark(
        {.sizes = a.sizes, .seeds = a.seeds, .reps = a.reps, .reds = a.reds, .presorted = a.presorted});
    std::cout << (a.json ? report.to_json() : report.to_table());
    return kOk;
}

struct VerifyArgs {
    std::size_t count = 1000;
    std::uint64_t seed = 1;
    std::size_t max_n = 20;
    std::size_t max_m = 30;
    std::int64_t range = 6;
    std::int64_t red_range = 3;
};

int run_verify(const VerifyArgs& a) {
    maxsep::Rng rng(a.seed);
    std::size_t bad = 0;
    std::size_t bounded = 0;
    for (std::size_t k = 0; k < a.count; ++k) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(a.max_n)));
        const auto m = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(a.max_m)));
        const auto red_half = rng.uniform(0, std::min(a.red_range, a.range));
        const auto inst = maxsep::gen_clustered(n, m, rng.next(), red_half, a.range);
        const auto got = maxsep::solve_one(inst);
        const auto want = maxsep::oracle_best(inst);
        const bool same = got.status == want.status &&
                          (got.status == maxsep::Status::unbounded ? got.unbounded == want.unbounded
                                                                    : got.area == want.area);
        bounded += want.status == maxsep::Status::bounded;
        if (!same) {
            ++bad;
            std::cerr << "mismatch on instance " << k << ":\n" << maxsep::dump_instance(inst);
        }
    }
    std::cout << (a.count - bad) << "/" << a.count << " instances agree with the oracle (" << bounded
              << " bounded)\n";
    return bad == 0 ? kOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum separating rectangle of red and blue points"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Solve an instance read from CSV or JSON");
    s->add_option("--input,-i", solve.input, "Input file, '-' for stdin");
    s->add_flag("--all", solve.all, "Every maximum separating rectangle");
    s->add_flag("--all-maximal", solve.all_maximal, "Every maximal separating rectangle (debugging)");
    s->add_option("--format,-f", solve.format)->check(CLI::IsMember({"json", "tsv", "svg"}));
    s->add_flag("--presorted", solve.presorted, "Blue points are already sorted by x");
    s->add_flag("--require-bounded", solve.require_bounded, "Exit with status 3 when unbounded");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Write a generated instance as CSV");
    g->add_option("--kind", gen.kind)->check(CLI::IsMember({"random", "omega-m", "fap"}));
    g->add_option("--n", gen.n, "Red points (random)");
    g->add_option("--m", gen.m, "Blue points (random, omega-m)");
    g->add_option("--seed", gen.seed);
    g->add_option("--lo", gen.lo, "Coordinate lower bound (random)");
    g->add_option("--hi", gen.hi, "Coordinate upper bound (random)");
    g->add_option("--x0", gen.x0, "omega-m parameter");
    g->add_option("--y0", gen.y0, "omega-m parameter");
    g->add_option("--values", gen.values, "fap values in [0,1]");
    g->add_option("--count", gen.count, "Random fap values when --values is absent");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Doubling benchmark of solve");
    b->add_option("--sizes", bench.sizes);
    b->add_option("--seeds", bench.seeds);
    b->add_option("--reps", bench.reps);
    b->add_option("--reds", bench.reds);
    b->add_flag("--presorted", bench.presorted);
    b->add_flag("--json", bench.json);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Compare the solver with the brute-force oracle");
    v->add_option("--count", verify.count);
    v->add_option("--seed", verify.seed);
    v->add_option("--max-n", verify.max_n);
    v->add_option("--max-m", verify.max_m);
    v->add_option("--range", verify.range, "Blue coordinates in [-range, range]");
    v->add_option("--red-range", verify.red_range, "Red coordinates in [-r, r] with r drawn up to this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadArgs;
    }

    try {
        if (s->parsed()) return run_solve(solve);
        if (g->parsed()) return run_gen(gen);
        if (b->parsed()) return run_bench(bench);
        return run_verify(verify);
    } catch (const maxsep::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
