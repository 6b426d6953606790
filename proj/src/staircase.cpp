#include "maxsep/staircase.hpp"

#include <algorithm>

namespace maxsep {

namespace {

bool by_x_then_y(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// Keeps, per group of equal x, the extreme y (minimum when keep_low), and only
// when it strictly improves on every group already kept. Groups are visited
// left to right or right to left.
std::vector<Point> frontier(const std::vector<Point>& pts, bool right_to_left, bool keep_low) {
    std::vector<Point> out;
    const std::size_t n = pts.size();
    std::size_t i = 0;
    auto at = [&](std::size_t k) -> const Point& { return right_to_left ? pts[n - 1 - k] : pts[k]; };
    while (i < n) {
        std::size_t j = i;
        Point best = at(i);
        while (j < n && at(j).x == at(i).x) {
            if (keep_low ? at(j).y < best.y : at(j).y > best.y) best = at(j);
            ++j;
        }
        if (out.empty() || (keep_low ? best.y < out.back().y : best.y > out.back().y)) out.push_back(best);
        i = j;
    }
    if (right_to_left) std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

Staircase build_staircase(std::vector<Point> points, Quadrant q, const AxisRect& smin, const AxisRect& smax,
                          bool presorted_x) {
    if (!presorted_x) std::sort(points.begin(), points.end(), by_x_then_y);

    Staircase s;
    s.quadrant = q;
    std::vector<Point> core;
    Point lead;
    Point trail;
    switch (q) {
        case Quadrant::NE:
            core = frontier(points, false, true);
            lead = {smin.xmax, smax.ymax};
            trail = {smax.xmax, smin.ymax};
            break;
        case Quadrant::SE:
            core = frontier(points, false, false);
            lead = {smin.xmax, smax.ymin};
            trail = {smax.xmax, smin.ymin};
            break;
        case Quadrant::NW:
            core = frontier(points, true, true);
            lead = {smax.xmin, smin.ymax};
            trail = {smin.xmin, smax.ymax};
            break;
        case Quadrant::SW:
            core = frontier(points, true, false);
            lead = {smax.xmin, smin.ymin};
            trail = {smin.xmin, smax.ymin};
            break;
    }
    s.entries.reserve(core.size() + 2);
    s.entries.push_back(lead);
    s.entries.insert(s.entries.end(), core.begin(), core.end());
    s.entries.push_back(trail);
    return s;
}

Staircases build_staircases(const Frame& frame, bool presorted_x) {
    const AxisRect smax = frame.smax();
    Staircases st;
    for (Quadrant q : kQuadrants)
        st[index(q)] = build_staircase(frame.quadrants[index(q)], q, frame.smin, smax, presorted_x);
    return st;
}

namespace {

bool y_key(Toward d) { return d == Toward::below || d == Toward::above; }
bool wants_less(Toward d) { return d == Toward::below || d == Toward::left; }

const Coord& key_of(const Point& p, Toward d) { return y_key(d) ? p.y : p.x; }
const Coord& other_of(const Point& p, Toward d) { return y_key(d) ? p.x : p.y; }

// True when a is the better of two entries with equal key: nearer to smin on
// the other axis, then lower index.
bool nearer(const Staircase& s, std::size_t a, std::size_t b, Toward d) {
    const Coord& oa = other_of(s.entries[a], d);
    const Coord& ob = other_of(s.entries[b], d);
    if (oa != ob) {
        const bool small_is_near = y_key(d) ? is_east(s.quadrant) : is_north(s.quadrant);
        return small_is_near ? oa < ob : oa > ob;
    }
    return a < b;
}

bool key_descends(Quadrant q, Toward d) {
    if (!y_key(d)) return false;
    return q == Quadrant::NE || q == Quadrant::SW;
}

}  // namespace

std::optional<std::size_t> scan_pointer(const Staircases& st, const Point& p, Quadrant to, Toward dir) {
    const Staircase& s = st[index(to)];
    const Coord& v = key_of(p, dir);
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Coord& k = key_of(s.entries[i], dir);
        if (wants_less(dir) ? !(k < v) : !(k > v)) continue;
        if (!best) {
            best = i;
            continue;
        }
        const Coord& bk = key_of(s.entries[*best], dir);
        if (k == bk ? nearer(s, i, *best, dir) : (wants_less(dir) ? k > bk : k < bk)) best = i;
    }
    return best;
}

PointerTables precompute_pointers(const Staircases& st) {
    PointerTables t;
    for (Quadrant from : kQuadrants) {
        PointerTables::Slot blank;
        for (auto& row : blank) row.fill(PointerTables::none);
        t.slots_[index(from)].assign(st[index(from)].size(), blank);
    }

    for (Quadrant to : kQuadrants) {
        const Staircase& target = st[index(to)];
        const std::size_t n = target.size();
        for (Toward dir : {Toward::below, Toward::left, Toward::above, Toward::right}) {
            // Target keys in ascending order: position k maps to entry ord(k).
            const bool desc = key_descends(to, dir);
            auto ord = [&](std::size_t k) { return desc ? n - 1 - k : k; };
            auto key_at = [&](std::size_t k) -> const Coord& { return key_of(target.entries[ord(k)], dir); };

            for (Quadrant from : kQuadrants) {
                const Staircase& src = st[index(from)];
                const std::size_t m = src.size();
                const bool src_desc = key_descends(from, dir);
                // c = number of target keys < v (wants_less) or <= v (otherwise);
                // non-decreasing as queries ascend.
                std::size_t c = 0;
                for (std::size_t qi = 0; qi < m; ++qi) {
                    const std::size_t e = src_desc ? m - 1 - qi : qi;
                    const Coord& v = key_of(src.entries[e], dir);
                    if (wants_less(dir)) {
                        while (c < n && key_at(c) < v) ++c;
                    } else {
                        while (c < n && key_at(c) <= v) ++c;
                    }
                    std::optional<std::size_t> pick;
                    if (wants_less(dir) && c > 0) {
                        const Coord& best = key_at(c - 1);
                        for (std::size_t k = c; k-- > 0 && key_at(k) == best;)
                            if (!pick || nearer(target, ord(k), *pick, dir)) pick = ord(k);
                    } else if (!wants_less(dir) && c < n) {
                        const Coord& best = key_at(c);
                        for (std::size_t k = c; k < n && key_at(k) == best; ++k)
                            if (!pick || nearer(target, ord(k), *pick, dir)) pick = ord(k);
                    }
                    if (pick)
                        t.slots_[index(from)][e][index(to)][static_cast<std::size_t>(dir)] =
                            static_cast<std::uint32_t>(*pick);
                }
            }
        }
    }
    return t;
}

}  // namespace maxsep
