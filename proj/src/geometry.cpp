#include "maxsep/geometry.hpp"

namespace maxsep {

Coord rect_area(const AxisRect& r) { return r.width() * r.height(); }

bool contains_closed(const AxisRect& r, const Point& p) {
    return r.xmin <= p.x && p.x <= r.xmax && r.ymin <= p.y && p.y <= r.ymax;
}

bool strictly_inside(const AxisRect& r, const Point& p) {
    return r.xmin < p.x && p.x < r.xmax && r.ymin < p.y && p.y < r.ymax;
}

bool rect_contains(const AxisRect& outer, const AxisRect& r) {
    return outer.xmin <= r.xmin && r.xmax <= outer.xmax && outer.ymin <= r.ymin && r.ymax <= outer.ymax;
}

}  // namespace maxsep
