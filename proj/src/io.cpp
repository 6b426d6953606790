#include "maxsep/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace maxsep {

using nlohmann::json;

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_header(std::string_view line) {
    std::string low;
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return low == "color,x,y";
}

Coord json_coord(const json& v, std::size_t item) {
    try {
        if (v.is_number_integer()) return Coord(v.get<std::int64_t>());
        if (v.is_string()) return Coord::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(0, "point " + std::to_string(item) + ": " + e.what());
    }
    throw ParseError(0, "point " + std::to_string(item) + ": coordinates must be integers or strings");
}

Instance parse_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    Instance inst;
    auto read = [&](const char* key, std::vector<Point>& out) {
        if (!doc.contains(key)) return;
        const json& arr = doc.at(key);
        if (!arr.is_array()) throw ParseError(0, std::string("'") + key + "' must be an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const json& p = arr[i];
            if (!p.is_array() || p.size() != 2) throw ParseError(0, "point " + std::to_string(i) + ": expected [x, y]");
            out.push_back({json_coord(p[0], i), json_coord(p[1], i)});
        }
    };
    read("red", inst.reds);
    read("blue", inst.blues);
    return inst;
}

Instance parse_csv(std::string_view text) {
    Instance inst;
    std::size_t lineno = 0;
    bool seen_data = false;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (lineno == 1 && line.size() >= 3 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
        line = trim(line);
        if (line.empty()) continue;
        if (!seen_data && is_header(line)) {
            seen_data = true;
            continue;
        }
        seen_data = true;

        std::vector<std::string_view> f;
        std::size_t start = 0;
        for (;;) {
            const auto c = line.find(',', start);
            f.push_back(trim(line.substr(start, c == std::string_view::npos ? std::string_view::npos : c - start)));
            if (c == std::string_view::npos) break;
            start = c + 1;
        }
        if (f.size() != 3) throw ParseError(lineno, "expected 3 fields (color,x,y), got " + std::to_string(f.size()));
        std::vector<Point>* dst = nullptr;
        if (f[0] == "R" || f[0] == "r") dst = &inst.reds;
        else if (f[0] == "B" || f[0] == "b") dst = &inst.blues;
        else throw ParseError(lineno, "unknown color '" + std::string(f[0]) + "' (expected R or B)");
        try {
            dst->push_back({Coord::parse(f[1]), Coord::parse(f[2])});
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return inst;
}

std::string coord(const Coord& c) { return c.str(); }

json rect_json(const AxisRect& r) {
    return {{"xmin", coord(r.xmin)}, {"ymin", coord(r.ymin)}, {"xmax", coord(r.xmax)}, {"ymax", coord(r.ymax)}};
}

json support_json(const Support& s) {
    if (!s) return "wall";
    return {{"x", coord(s->x)}, {"y", coord(s->y)}};
}

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string directions(const std::vector<Side>& sides) {
    std::string s;
    for (Side d : sides) {
        if (!s.empty()) s += ',';
        s += to_string(d);
    }
    return s;
}

// SVG in a y-up frame scaled to roughly 800 units.
class SvgCanvas {
public:
    SvgCanvas(const Instance* inst, const std::vector<AxisRect>& rects) {
        bool any = false;
        auto grow = [&](double x, double y) {
            if (!any) {
                x0_ = x1_ = x;
                y0_ = y1_ = y;
                any = true;
            }
            x0_ = std::min(x0_, x);
            x1_ = std::max(x1_, x);
            y0_ = std::min(y0_, y);
            y1_ = std::max(y1_, y);
        };
        if (inst) {
            for (const auto& p : inst->reds) grow(p.x.to_double(), p.y.to_double());
            for (const auto& p : inst->blues) grow(p.x.to_double(), p.y.to_double());
        }
        for (const auto& r : rects) {
            grow(r.xmin.to_double(), r.ymin.to_double());
            grow(r.xmax.to_double(), r.ymax.to_double());
        }
        const double span = std::max({x1_ - x0_, y1_ - y0_, 1e-9});
        scale_ = 800.0 / span;
        pad_ = 20.0;
    }

    double sx(double x) const { return pad_ + (x - x0_) * scale_; }
    double sy(double y) const { return pad_ + (y1_ - y) * scale_; }
    double width() const { return 2 * pad_ + (x1_ - x0_) * scale_; }
    double height() const { return 2 * pad_ + (y1_ - y0_) * scale_; }

private:
    double x0_ = 0, x1_ = 0, y0_ = 0, y1_ = 0, scale_ = 1, pad_ = 20;
};

std::string svg(const Instance* inst, const std::vector<std::pair<AxisRect, std::string>>& rects) {
    std::vector<AxisRect> just;
    for (const auto& [r, _] : rects) just.push_back(r);
    const SvgCanvas c(inst, just);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(c.width()) << "\" height=\""
       << fixed(c.height()) << "\">\n";
    for (const auto& [r, cls] : rects) {
        os << "<rect class=\"" << cls << "\" x=\"" << fixed(c.sx(r.xmin.to_double())) << "\" y=\""
           << fixed(c.sy(r.ymax.to_double())) << "\" width=\"" << fixed(c.sx(r.xmax.to_double()) - c.sx(r.xmin.to_double()))
           << "\" height=\"" << fixed(c.sy(r.ymin.to_double()) - c.sy(r.ymax.to_double()))
           << "\" fill=\"none\" stroke=\"" << (cls == "optimum" ? "black" : "gray")
           << "\" stroke-dasharray=\"" << (cls == "optimum" ? "none" : "4 3") << "\"/>\n";
    }
    if (inst) {
        for (const auto& p : inst->reds)
            os << "<circle class=\"red\" cx=\"" << fixed(c.sx(p.x.to_double())) << "\" cy=\""
               << fixed(c.sy(p.y.to_double())) << "\" r=\"4\" fill=\"red\" stroke=\"red\"/>\n";
        for (const auto& p : inst->blues)
            os << "<circle class=\"blue\" cx=\"" << fixed(c.sx(p.x.to_double())) << "\" cy=\""
               << fixed(c.sy(p.y.to_double())) << "\" r=\"4\" fill=\"none\" stroke=\"blue\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

Instance parse_points(std::string_view text) {
    const auto body = trim(text);
    Instance inst = !body.empty() && body.front() == '{' ? parse_json(body) : parse_csv(text);
    if (inst.reds.empty()) throw ParseError(0, "no red points");
    return inst;
}

std::string dump_instance(const Instance& inst) {
    std::string out = "color,x,y\n";
    for (const auto& p : inst.reds) out += "R," + p.x.str() + "," + p.y.str() + "\n";
    for (const auto& p : inst.blues) out += "B," + p.x.str() + "," + p.y.str() + "\n";
    return out;
}

std::string emit_solution(const Solution& sol, Format fmt, const Instance* inst) {
    const bool bounded = sol.status == Status::bounded;
    switch (fmt) {
        case Format::json: {
            json j;
            if (!bounded) {
                j["status"] = "unbounded";
                json dirs = json::array();
                for (Side s : sol.unbounded) dirs.push_back(std::string(to_string(s)));
                j["directions"] = dirs;
                j["area"] = "unbounded";
                j["forced_blue"] = sol.forced_blue;
                return j.dump(2) + "\n";
            }
            j["status"] = "bounded";
            j["rect"] = rect_json(sol.best.rect);
            j["area"] = coord(sol.area);
            j["area_approx"] = sol.area.to_double();
            j["forced_blue"] = sol.forced_blue;
            json sup;
            for (Side s : kSides) sup[std::string(to_string(s))] = support_json(sol.best.supports[index(s)]);
            j["supports"] = sup;
            j["case"] = sol.best.case_tag;
            if (sol.best.diagonal != Diagonal::none) j["diagonal"] = sol.best.diagonal == Diagonal::ne_sw ? "NE/SW" : "NW/SE";
            return j.dump(2) + "\n";
        }
        case Format::tsv: {
            if (!bounded) return "unbounded\t" + directions(sol.unbounded) + "\n";
            const AxisRect& r = sol.best.rect;
            return "bounded\t" + coord(r.xmin) + "\t" + coord(r.ymin) + "\t" + coord(r.xmax) + "\t" + coord(r.ymax) +
                   "\t" + coord(sol.area) + "\t" + fixed(sol.area.to_double()) + "\t" +
                   std::to_string(sol.forced_blue) + "\t" + std::to_string(sol.best.case_tag) + "\n";
        }
        case Format::svg: {
            std::vector<std::pair<AxisRect, std::string>> rects{{sol.smin, "smin"}};
            if (sol.smax) rects.emplace_back(*sol.smax, "smax");
            if (bounded) rects.emplace_back(sol.best.rect, "optimum");
            return svg(inst, rects);
        }
    }
    return {};
}

std::string emit_all(const std::vector<AxisRect>& rects, Format fmt, const Instance* inst) {
    switch (fmt) {
        case Format::json: {
            json j;
            j["status"] = "bounded";
            j["count"] = rects.size();
            if (!rects.empty()) {
                const Coord a = rect_area(rects.front());
                j["area"] = coord(a);
                j["area_approx"] = a.to_double();
            }
            json arr = json::array();
            for (const auto& r : rects) arr.push_back(rect_json(r));
            j["rects"] = arr;
            return j.dump(2) + "\n";
        }
        case Format::tsv: {
            std::string out;
            for (const auto& r : rects)
                out += coord(r.xmin) + "\t" + coord(r.ymin) + "\t" + coord(r.xmax) + "\t" + coord(r.ymax) + "\t" +
                       coord(rect_area(r)) + "\n";
            return out;
        }
        case Format::svg: {
            std::vector<std::pair<AxisRect, std::string>> tagged;
            for (const auto& r : rects) tagged.emplace_back(r, "optimum");
            return svg(inst, tagged);
        }
    }
    return {};
}

}  // namespace maxsep
