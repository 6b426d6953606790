#include "maxsep/oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace maxsep {

std::size_t count_open_interior(const AxisRect& rect, const std::vector<Point>& blues) {
    return static_cast<std::size_t>(
        std::count_if(blues.begin(), blues.end(), [&](const Point& p) { return strictly_inside(rect, p); }));
}

namespace {

struct Grid {
    AxisRect smin;
    AxisRect smax;
    std::size_t forced = 0;
    std::vector<Coord> lefts, rights, bottoms, tops;
};

// Slides each side of smin outward to the nearest blue point sharing its
// strip; a strip is the open extent of smin, or its single value when smin is
// flat along that axis. Returns the unbounded directions instead when any
// slide never stops.
std::optional<Grid> make_grid(const Instance& inst, std::vector<Side>& open, AxisRect& smin_out) {
    if (inst.reds.empty()) throw std::invalid_argument("no red points");
    Grid g;
    auto xs = inst.reds;
    const auto [xlo, xhi] = std::minmax_element(xs.begin(), xs.end(), [](auto& a, auto& b) { return a.x < b.x; });
    const auto [ylo, yhi] = std::minmax_element(xs.begin(), xs.end(), [](auto& a, auto& b) { return a.y < b.y; });
    g.smin = {xlo->x, ylo->y, xhi->x, yhi->y};
    const AxisRect& s = g.smin;
    smin_out = s;

    auto shares = [](const Coord& v, const Coord& a, const Coord& b) { return a == b ? v == a : (a < v && v < b); };
    std::optional<Coord> top, bottom, left, right;
    for (const Point& p : inst.blues) {
        if (shares(p.x, s.xmin, s.xmax)) {
            if (s.ymax <= p.y && (!top || p.y < *top)) top = p.y;
            if (p.y <= s.ymin && (!bottom || p.y > *bottom)) bottom = p.y;
        }
        if (shares(p.y, s.ymin, s.ymax)) {
            if (s.xmax <= p.x && (!right || p.x < *right)) right = p.x;
            if (p.x <= s.xmin && (!left || p.x > *left)) left = p.x;
        }
    }
    if (!top) open.push_back(Side::top);
    if (!right) open.push_back(Side::right);
    if (!bottom) open.push_back(Side::bottom);
    if (!left) open.push_back(Side::left);
    g.forced = count_open_interior(s, inst.blues);
    if (!open.empty()) return std::nullopt;
    g.smax = {*left, *bottom, *right, *top};

    g.lefts = {g.smax.xmin, s.xmin};
    g.rights = {g.smax.xmax, s.xmax};
    g.bottoms = {g.smax.ymin, s.ymin};
    g.tops = {g.smax.ymax, s.ymax};
    for (const Point& p : inst.blues) {
        if (g.smax.xmin <= p.x && p.x <= s.xmin) g.lefts.push_back(p.x);
        if (s.xmax <= p.x && p.x <= g.smax.xmax) g.rights.push_back(p.x);
        if (g.smax.ymin <= p.y && p.y <= s.ymin) g.bottoms.push_back(p.y);
        if (s.ymax <= p.y && p.y <= g.smax.ymax) g.tops.push_back(p.y);
    }
    for (auto* v : {&g.lefts, &g.rights, &g.bottoms, &g.tops}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    return g;
}

template <class Fn>
void each_feasible(const Grid& g, const Instance& inst, Fn&& fn) {
    for (const Coord& l : g.lefts)
        for (const Coord& r : g.rights)
            for (const Coord& b : g.bottoms)
                for (const Coord& t : g.tops) {
                    const AxisRect rect{l, b, r, t};
                    if (count_open_interior(rect, inst.blues) == g.forced) fn(rect);
                }
}

}  // namespace

Solution oracle_best(const Instance& inst) {
    Solution sol;
    std::vector<Side> open;
    const auto g = make_grid(inst, open, sol.smin);
    if (!g) {
        sol.status = Status::unbounded;
        sol.unbounded = open;
        sol.forced_blue = count_open_interior(sol.smin, inst.blues);
        return sol;
    }
    sol.smin = g->smin;
    sol.smax = g->smax;
    sol.forced_blue = g->forced;
    bool any = false;
    each_feasible(*g, inst, [&](const AxisRect& r) {
        Coord a = rect_area(r);
        if (!any || a > sol.area) {
            any = true;
            sol.area = a;
            sol.best.rect = r;
        }
    });
    return sol;
}

std::vector<AxisRect> oracle_all(const Instance& inst, bool all_maximal) {
    std::vector<Side> open;
    AxisRect smin;
    const auto g = make_grid(inst, open, smin);
    if (!g) throw UnboundedError(open);
    std::vector<AxisRect> feasible;
    each_feasible(*g, inst, [&](const AxisRect& r) { feasible.push_back(r); });

    Coord best = 0;
    for (const AxisRect& r : feasible) best = std::max(best, rect_area(r));
    std::vector<AxisRect> out;
    for (const AxisRect& r : feasible) {
        if (!all_maximal && rect_area(r) != best) continue;
        const bool dominated = std::any_of(feasible.begin(), feasible.end(), [&](const AxisRect& o) {
            return o != r && rect_contains(o, r);
        });
        if (!dominated) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace maxsep
