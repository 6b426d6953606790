#include "maxsep/solver.hpp"

#include <algorithm>

namespace maxsep {

namespace {

// Maximal empty rectangles of `box` among `pts`, every point strictly inside
// the box. Three families: left side on a point (sweep right), left side on
// the wall with right side on a point (sweep left), and both sides on walls.
std::vector<AxisRect> maximal_empty(const AxisRect& box, std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<AxisRect> out;
    const std::size_t n = pts.size();

    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = pts[i];
        Coord top = box.ymax;
        Coord bottom = box.ymin;
        bool open = true;
        std::size_t k = i + 1;
        while (k < n && pts[k].x == p.x) ++k;
        while (open && k < n) {
            std::size_t e = k;
            while (e < n && pts[e].x == pts[k].x) ++e;
            bool blocked = false;
            for (std::size_t g = k; g < e; ++g) blocked = blocked || (bottom < pts[g].y && pts[g].y < top);
            if (blocked) out.push_back({p.x, bottom, pts[k].x, top});
            for (std::size_t g = k; g < e; ++g) {
                const Coord& y = pts[g].y;
                if (!(bottom < y && y < top)) continue;
                if (y > p.y) top = y;
                else if (y < p.y) bottom = y;
                else open = false;
            }
            k = e;
        }
        if (open) out.push_back({p.x, bottom, box.xmax, top});
    }

    for (std::size_t i = n; i-- > 0;) {
        const Point& p = pts[i];
        Coord top = box.ymax;
        Coord bottom = box.ymin;
        bool open = true;
        std::size_t k = i;
        while (k > 0 && pts[k - 1].x == p.x) --k;
        while (open && k > 0) {
            std::size_t s = k;
            while (s > 0 && pts[s - 1].x == pts[k - 1].x) --s;
            for (std::size_t g = s; g < k; ++g) {
                const Coord& y = pts[g].y;
                if (!(bottom < y && y < top)) continue;
                if (y > p.y) top = y;
                else if (y < p.y) bottom = y;
                else open = false;
            }
            k = s;
        }
        if (open) out.push_back({box.xmin, bottom, p.x, top});
    }

    std::vector<Coord> ys{box.ymin, box.ymax};
    for (const Point& p : pts) ys.push_back(p.y);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (std::size_t k = 0; k + 1 < ys.size(); ++k) out.push_back({box.xmin, ys[k], box.xmax, ys[k + 1]});
    if (ys.size() == 1) out.push_back(box);
    return out;
}

}  // namespace

std::vector<AxisRect> solve_all(const Instance& inst, const SolveAllOptions& opt) {
    const AxisRect smin = compute_smin(inst.reds);
    const SideBounds sides = compute_smax(smin, inst.blues);
    std::vector<Side> open_sides;
    for (Side s : kSides)
        if (!sides[index(s)]) open_sides.push_back(s);
    if (!open_sides.empty()) throw UnboundedError(open_sides);

    const AxisRect box{sides[index(Side::left)]->value, sides[index(Side::bottom)]->value,
                       sides[index(Side::right)]->value, sides[index(Side::top)]->value};
    std::vector<Point> pts;
    for (const Point& p : inst.blues)
        if (strictly_inside(box, p) && !strictly_inside(smin, p)) pts.push_back(p);

    std::vector<AxisRect> rects;
    for (const AxisRect& r : maximal_empty(box, std::move(pts)))
        if (rect_contains(r, smin)) rects.push_back(r);
    std::sort(rects.begin(), rects.end());
    rects.erase(std::unique(rects.begin(), rects.end()), rects.end());
    if (opt.all_maximal || rects.empty()) return rects;

    Coord best = rect_area(rects.front());
    for (const AxisRect& r : rects) best = std::max(best, rect_area(r));
    std::vector<AxisRect> top;
    for (const AxisRect& r : rects)
        if (rect_area(r) == best) top.push_back(r);
    return top;
}

}  // namespace maxsep
