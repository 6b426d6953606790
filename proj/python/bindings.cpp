#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxsep/generators.hpp"
#include "maxsep/io.hpp"
#include "maxsep/oracle.hpp"
#include "maxsep/solver.hpp"

namespace py = pybind11;
using namespace maxsep;

namespace {

// Coordinates cross the boundary as exact strings ("3", "-1/2"); the Python
// layer turns them into fractions.Fraction.
using Pair = std::pair<std::string, std::string>;

std::vector<Point> points(const std::vector<Pair>& in) {
    std::vector<Point> out;
    out.reserve(in.size());
    for (const auto& [x, y] : in) out.push_back({Coord::parse(x), Coord::parse(y)});
    return out;
}

std::vector<Pair> pairs(const std::vector<Point>& in) {
    std::vector<Pair> out;
    for (const auto& p : in) out.emplace_back(p.x.str(), p.y.str());
    return out;
}

py::tuple rect(const AxisRect& r) { return py::make_tuple(r.xmin.str(), r.ymin.str(), r.xmax.str(), r.ymax.str()); }

py::dict solution(const Solution& s) {
    py::dict d;
    d["forced_blue"] = s.forced_blue;
    d["smin"] = rect(s.smin);
    if (s.status == Status::unbounded) {
        d["status"] = "unbounded";
        py::list dirs;
        for (Side side : s.unbounded) dirs.append(std::string(to_string(side)));
        d["directions"] = dirs;
        return d;
    }
    d["status"] = "bounded";
    d["rect"] = rect(s.best.rect);
    d["area"] = s.area.str();
    d["smax"] = rect(*s.smax);
    d["case"] = s.best.case_tag;
    py::dict sup;
    for (Side side : kSides) {
        const auto& p = s.best.supports[index(side)];
        if (p) sup[py::str(std::string(to_string(side)))] = py::make_tuple(p->x.str(), p->y.str());
        else sup[py::str(std::string(to_string(side)))] = py::none();
    }
    d["supports"] = sup;
    return d;
}

py::list rects(const std::vector<AxisRect>& rs) {
    py::list out;
    for (const auto& r : rs) out.append(rect(r));
    return out;
}

py::tuple instance(const Instance& inst) { return py::make_tuple(pairs(inst.reds), pairs(inst.blues)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Maximum separating rectangle of red and blue points";

    py::register_exception<UnboundedError>(m, "UnboundedError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def(
        "solve",
        [](const std::vector<Pair>& reds, const std::vector<Pair>& blues, bool presorted) {
            Solution s;
            {
                const Instance inst{points(reds), points(blues)};
                py::gil_scoped_release release;
                s = solve_one(inst, {.presorted = presorted});
            }
            return solution(s);
        },
        py::arg("reds"), py::arg("blues"), py::arg("presorted") = false);

    m.def(
        "solve_all",
        [](const std::vector<Pair>& reds, const std::vector<Pair>& blues, bool all_maximal) {
            return rects(solve_all({points(reds), points(blues)}, {.all_maximal = all_maximal}));
        },
        py::arg("reds"), py::arg("blues"), py::arg("all_maximal") = false);

    m.def(
        "oracle_best",
        [](const std::vector<Pair>& reds, const std::vector<Pair>& blues) {
            return solution(oracle_best({points(reds), points(blues)}));
        },
        py::arg("reds"), py::arg("blues"));

    m.def(
        "parse_points", [](const std::string& text) { return instance(parse_points(text)); }, py::arg("text"));

    m.def(
        "gen_omega_m",
        [](std::size_t mm, const std::string& x0, const std::string& y0) {
            return instance(gen_omega_m(mm, Coord::parse(x0), Coord::parse(y0)));
        },
        py::arg("m"), py::arg("x0") = "1", py::arg("y0") = "1");

    m.def(
        "gen_fap",
        [](const std::vector<std::string>& values) {
            std::vector<Coord> v;
            for (const auto& s : values) v.push_back(Coord::parse(s));
            return instance(gen_fap(v));
        },
        py::arg("values"));

    m.def(
        "gen_random",
        [](std::size_t n, std::size_t mm, std::uint64_t seed, std::int64_t lo, std::int64_t hi) {
            return instance(gen_random(n, mm, seed, lo, hi));
        },
        py::arg("n"), py::arg("m"), py::arg("seed"), py::arg("lo") = -10, py::arg("hi") = 10);
}
