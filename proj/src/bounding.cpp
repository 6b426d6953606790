#include "maxsep/bounding.hpp"

#include <stdexcept>

namespace maxsep {

std::string_view to_string(Side s) {
    switch (s) {
        case Side::top: return "top";
        case Side::right: return "right";
        case Side::bottom: return "bottom";
        case Side::left: return "left";
    }
    return "?";
}

std::string_view to_string(Quadrant q) {
    switch (q) {
        case Quadrant::NE: return "NE";
        case Quadrant::NW: return "NW";
        case Quadrant::SW: return "SW";
        case Quadrant::SE: return "SE";
    }
    return "?";
}

bool Frame::bounded() const {
    for (const auto& s : sides)
        if (!s) return false;
    return true;
}

std::vector<Side> Frame::unbounded_sides() const {
    std::vector<Side> out;
    for (Side s : kSides)
        if (!sides[index(s)]) out.push_back(s);
    return out;
}

AxisRect Frame::smax() const {
    if (!bounded()) throw std::logic_error("smax of an unbounded frame");
    return {sides[index(Side::left)]->value, sides[index(Side::bottom)]->value,
            sides[index(Side::right)]->value, sides[index(Side::top)]->value};
}

std::size_t Frame::annulus_size() const {
    std::size_t k = 0;
    for (const auto& q : quadrants) k += q.size();
    return k;
}

AxisRect compute_smin(const std::vector<Point>& reds) {
    if (reds.empty()) throw std::invalid_argument("no red points");
    AxisRect r{reds.front().x, reds.front().y, reds.front().x, reds.front().y};
    for (const Point& p : reds) {
        if (p.x < r.xmin) r.xmin = p.x;
        if (p.x > r.xmax) r.xmax = p.x;
        if (p.y < r.ymin) r.ymin = p.y;
        if (p.y > r.ymax) r.ymax = p.y;
    }
    return r;
}

namespace {

// A blue point shares a strip with smin when its coordinate lies in the open
// extent of smin along that axis, or equals it when that extent is a single
// value. Points at a non-degenerate corner abscissa are quadrant points: they
// can be dodged by resting a side on them.
bool in_open_extent(const Coord& v, const Coord& lo, const Coord& hi) {
    return lo < hi ? (lo < v && v < hi) : v == lo;
}

void lower(std::optional<Wall>& w, const Coord& v, const Point& p) {
    if (!w || v < w->value) w = Wall{v, p};
}

void raise(std::optional<Wall>& w, const Coord& v, const Point& p) {
    if (!w || v > w->value) w = Wall{v, p};
}

}  // namespace

SideBounds compute_smax(const AxisRect& smin, const std::vector<Point>& blues) {
    SideBounds s;
    for (const Point& p : blues) {
        if (in_open_extent(p.x, smin.xmin, smin.xmax)) {
            if (p.y >= smin.ymax) lower(s[index(Side::top)], p.y, p);
            if (p.y <= smin.ymin) raise(s[index(Side::bottom)], p.y, p);
        }
        if (in_open_extent(p.y, smin.ymin, smin.ymax)) {
            if (p.x >= smin.xmax) lower(s[index(Side::right)], p.x, p);
            if (p.x <= smin.xmin) raise(s[index(Side::left)], p.x, p);
        }
    }
    return s;
}

std::size_t count_forced(const AxisRect& smin, const std::vector<Point>& blues) {
    std::size_t k = 0;
    for (const Point& p : blues) k += strictly_inside(smin, p) ? 1 : 0;
    return k;
}

Frame prune(const AxisRect& smin, const SideBounds& sides, const std::vector<Point>& blues) {
    Frame f;
    f.smin = smin;
    f.sides = sides;
    const AxisRect smax = f.smax();
    for (const Point& p : blues) {
        if (strictly_inside(smin, p)) {
            ++f.forced_blue;
        } else if (!contains_closed(smax, p)) {
            ++f.outside;
        } else if (!strictly_inside(smax, p)) {
            ++f.on_smax_boundary;
        } else {
            // Strictly inside smax and not a strip point, so exactly one
            // corner region applies (see in_open_extent).
            const bool east = p.x >= smin.xmax && p.x > smin.xmin;
            const bool north = p.y >= smin.ymax && p.y > smin.ymin;
            const Quadrant q = north ? (east ? Quadrant::NE : Quadrant::NW) : (east ? Quadrant::SE : Quadrant::SW);
            f.quadrants[index(q)].push_back(p);
        }
    }
    return f;
}

}  // namespace maxsep
