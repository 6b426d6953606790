#include "maxsep/solver.hpp"

#include <algorithm>
#include <string>

namespace maxsep {

namespace {

std::string unbounded_message(const std::vector<Side>& sides) {
    std::string s = "solution is unbounded:";
    for (Side d : sides) {
        s += ' ';
        s += to_string(d);
    }
    return s;
}

}  // namespace

UnboundedError::UnboundedError(std::vector<Side> sides)
    : std::runtime_error(unbounded_message(sides)), sides_(std::move(sides)) {}

namespace {

using Ref = SupportRef;

struct Bound {
    Coord value;
    Ref ref;
};

// Side profiles of the annulus, each read off one pointer. With R_N(T) the
// smallest x over NE entries below T, a rectangle [L,R]x[B,T] around smin is
// feasible iff R <= R_N(T), R <= R_S(B), L >= L_N(T), L >= L_S(B); the
// symmetric forms (T_E(R) etc.) express the same constraints from the other
// axis.
class Profiles {
public:
    Profiles(const Frame& f, const Staircases& st, const PointerTables& ptr)
        : st_(st), ptr_(ptr), smax_(f.smax()) {}

    [[nodiscard]] const Point& at(Ref r) const { return st_[index(r.quadrant)].entries[r.entry]; }
    [[nodiscard]] Support support(Ref r) const {
        if (st_[index(r.quadrant)].is_sentinel(r.entry)) return std::nullopt;
        return at(r);
    }
    [[nodiscard]] Ref lead(Quadrant q) const { return {q, 0}; }
    [[nodiscard]] Ref trail(Quadrant q) const { return {q, st_[index(q)].size() - 1}; }

    // Right side allowed by north points below the top through t.
    [[nodiscard]] Bound rn(Ref t) const { return x_of(t, Quadrant::NE, Toward::below, smax_.xmax, trail(Quadrant::NE)); }
    [[nodiscard]] Bound ln(Ref t) const { return x_of(t, Quadrant::NW, Toward::below, smax_.xmin, lead(Quadrant::NW)); }
    [[nodiscard]] Bound rs(Ref b) const { return x_of(b, Quadrant::SE, Toward::above, smax_.xmax, trail(Quadrant::SE)); }
    [[nodiscard]] Bound ls(Ref b) const { return x_of(b, Quadrant::SW, Toward::above, smax_.xmin, lead(Quadrant::SW)); }
    // Top or bottom allowed by points left of the right side through r, or
    // right of the left side through l.
    [[nodiscard]] Bound te(Ref r) const { return y_of(r, Quadrant::NE, Toward::left, smax_.ymax, lead(Quadrant::NE)); }
    [[nodiscard]] Bound be(Ref r) const { return y_of(r, Quadrant::SE, Toward::left, smax_.ymin, lead(Quadrant::SE)); }
    [[nodiscard]] Bound tw(Ref l) const { return y_of(l, Quadrant::NW, Toward::right, smax_.ymax, trail(Quadrant::NW)); }
    [[nodiscard]] Bound bw(Ref l) const { return y_of(l, Quadrant::SW, Toward::right, smax_.ymin, trail(Quadrant::SW)); }

    [[nodiscard]] Bound entry_x(Ref r) const { return {at(r).x, r}; }
    [[nodiscard]] Bound entry_y(Ref r) const { return {at(r).y, r}; }

    [[nodiscard]] Candidate make(const Bound& t, const Bound& r, const Bound& b, const Bound& l, int tag) const {
        Candidate c;
        c.rect = {l.value, b.value, r.value, t.value};
        c.supports[index(Side::top)] = support(t.ref);
        c.supports[index(Side::right)] = support(r.ref);
        c.supports[index(Side::bottom)] = support(b.ref);
        c.supports[index(Side::left)] = support(l.ref);
        c.case_tag = tag;
        return c;
    }

    [[nodiscard]] const AxisRect& smax() const { return smax_; }

private:
    [[nodiscard]] Bound x_of(Ref from, Quadrant to, Toward d, const Coord& wall, Ref wall_ref) const {
        if (auto k = ptr_.get(from.quadrant, from.entry, to, d)) return entry_x({to, *k});
        return {wall, wall_ref};
    }
    [[nodiscard]] Bound y_of(Ref from, Quadrant to, Toward d, const Coord& wall, Ref wall_ref) const {
        if (auto k = ptr_.get(from.quadrant, from.entry, to, d)) return entry_y({to, *k});
        return {wall, wall_ref};
    }

    const Staircases& st_;
    const PointerTables& ptr_;
    AxisRect smax_;
};

const Bound& higher(const Bound& a, const Bound& b) { return b.value > a.value ? b : a; }
const Bound& lower(const Bound& a, const Bound& b) { return b.value < a.value ? b : a; }

}  // namespace

std::vector<Candidate> enumerate_cases_1_2(const Frame& frame, const Staircases& st, const PointerTables& ptr) {
    const Profiles P(frame, st, ptr);
    std::vector<Candidate> one;
    std::vector<Candidate> two;

    bool clean = true;
    for (const auto& s : st) clean = clean && s.real_count() == 0;
    if (clean) {
        const AxisRect smax = frame.smax();
        Candidate c;
        c.rect = smax;
        c.case_tag = 1;
        one.push_back(c);
        return one;
    }

    // A maximal rectangle takes its right side from NE (= R_N(T)) or SE
    // (= R_S(B)) and its left side from NW or SW. When both come from the
    // same side of smin, or when the top and bottom are fixed by the same
    // quadrant pair as the width, one side determines the rest; the only
    // two-parameter families are the Case-3 diagonals.
    for (Quadrant q : {Quadrant::NE, Quadrant::NW}) {
        for (std::size_t i = 0; i < st[index(q)].size(); ++i) {
            const Ref t{q, i};
            const Bound T = P.entry_y(t);
            {
                // Three supports north of smin.
                const Bound R = P.rn(t);
                const Bound L = P.ln(t);
                const Bound B = higher(P.be(R.ref), P.bw(L.ref));
                one.push_back(P.make(T, R, B, L, 1));
            }
            {
                // Right from NE, bottom from SE: east group when the top is in
                // NE, the NW-NE-SE-SW pinwheel when it is in NW.
                const Bound R = P.rn(t);
                const Bound B = P.be(R.ref);
                const Bound L = higher(P.ln(t), P.ls(B.ref));
                (q == Quadrant::NE ? one : two).push_back(P.make(T, R, B, L, q == Quadrant::NE ? 1 : 2));
            }
            {
                // Left from NW, bottom from SW: west group or the other pinwheel.
                const Bound L = P.ln(t);
                const Bound B = P.bw(L.ref);
                const Bound R = lower(P.rn(t), P.rs(B.ref));
                (q == Quadrant::NW ? one : two).push_back(P.make(T, R, B, L, q == Quadrant::NW ? 1 : 2));
            }
        }
    }
    for (Quadrant q : {Quadrant::SE, Quadrant::SW}) {
        for (std::size_t i = 0; i < st[index(q)].size(); ++i) {
            const Ref s{q, i};
            const Bound B = P.entry_y(s);
            {
                const Bound R = P.rs(s);
                const Bound L = P.ls(s);
                const Bound T = lower(P.te(R.ref), P.tw(L.ref));
                one.push_back(P.make(T, R, B, L, 1));
            }
            {
                const Bound R = P.rs(s);
                const Bound T = P.te(R.ref);
                const Bound L = higher(P.ln(T.ref), P.ls(s));
                one.push_back(P.make(T, R, B, L, 1));
            }
            {
                const Bound L = P.ls(s);
                const Bound T = P.tw(L.ref);
                const Bound R = lower(P.rn(T.ref), P.rs(s));
                one.push_back(P.make(T, R, B, L, 1));
            }
        }
    }
    one.insert(one.end(), two.begin(), two.end());
    return one;
}

Case3Windows build_case3_windows(const Frame& frame, const Staircases& st, const PointerTables& ptr,
                                 Diagonal diagonal) {
    const Profiles P(frame, st, ptr);
    Case3Windows w;
    w.diagonal = diagonal;
    StaircaseMatrix& m = w.matrix;
    std::vector<Coord> min_left;
    std::vector<Coord> min_bottom;

    if (diagonal == Diagonal::ne_sw) {
        const Staircase& ne = st[index(Quadrant::NE)];
        const Staircase& sw = st[index(Quadrant::SW)];
        for (std::size_t i = 0; i + 1 < ne.size(); ++i) {
            const Ref top{Quadrant::NE, i};
            const Ref right{Quadrant::NE, i + 1};
            m.top.push_back(ne.entries[i].y);
            m.right.push_back(ne.entries[i + 1].x);
            // Left must clear the last NW point below the top; bottom the
            // last SE point left of the right side.
            min_left.push_back(P.ln(top).value);
            min_bottom.push_back(P.be(right).value);
            w.row_refs.push_back({top, right});
        }
        for (std::size_t j = 0; j + 1 < sw.size(); ++j) {
            m.left.push_back(sw.entries[j].x);
            m.bottom.push_back(sw.entries[j + 1].y);
            w.col_refs.push_back({Ref{Quadrant::SW, j}, Ref{Quadrant::SW, j + 1}});
        }
    } else {
        // Mirror x: NW pairs read right to left play the NE rows, SE pairs
        // read right to left play the SW columns.
        const Staircase& nw = st[index(Quadrant::NW)];
        const Staircase& se = st[index(Quadrant::SE)];
        for (std::size_t j = nw.size() - 1; j-- > 0;) {
            const Ref left{Quadrant::NW, j};
            const Ref top{Quadrant::NW, j + 1};
            m.top.push_back(nw.entries[j + 1].y);
            m.right.push_back(-nw.entries[j].x);
            min_left.push_back(-P.rn(top).value);
            min_bottom.push_back(P.bw(left).value);
            w.row_refs.push_back({top, left});
        }
        for (std::size_t i = se.size() - 1; i-- > 0;) {
            m.left.push_back(-se.entries[i + 1].x);
            m.bottom.push_back(se.entries[i].y);
            w.col_refs.push_back({Ref{Quadrant::SE, i + 1}, Ref{Quadrant::SE, i}});
        }
    }

    // Columns have non-decreasing left and non-increasing bottom, so each
    // window is a contiguous run; both ends move left as rows advance.
    const std::size_t rows = m.rows();
    m.first.resize(rows);
    m.last.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto f = std::partition_point(m.left.begin(), m.left.end(),
                                            [&](const Coord& l) { return l < min_left[i]; });
        const auto l = std::partition_point(m.bottom.begin(), m.bottom.end(),
                                            [&](const Coord& b) { return b >= min_bottom[i]; });
        m.first[i] = f - m.left.begin();
        m.last[i] = (l - m.bottom.begin()) - 1;
    }
    return w;
}

std::vector<Candidate> case3_candidates(const Case3Windows& w, Case3Search search, const Staircases& st,
                                        EvalCounter* counter) {
    const StaircaseMatrix& m = w.matrix;
    std::vector<RowMax> rm =
        search == Case3Search::exact ? window_maxima(m, counter) : row_maxima(m, counter);

    auto at = [&](Ref r) -> const Point& { return st[index(r.quadrant)].entries[r.entry]; };
    auto sup = [&](Ref r) -> Support {
        if (st[index(r.quadrant)].is_sentinel(r.entry)) return std::nullopt;
        return at(r);
    };

    std::vector<Candidate> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const RowMax& r = rm[i];
        // A maximum in the padding means the row has no Case-3 rectangle.
        if (r.col < 0 || !m.defined(i, static_cast<std::size_t>(r.col))) continue;
        const auto j = static_cast<std::size_t>(r.col);
        Candidate c;
        c.case_tag = 3;
        c.diagonal = w.diagonal;
        const auto& rr = w.row_refs[i];
        const auto& cr = w.col_refs[j];
        if (w.diagonal == Diagonal::ne_sw) {
            c.rect = {at(cr[0]).x, at(cr[1]).y, at(rr[1]).x, at(rr[0]).y};
            c.supports[index(Side::top)] = sup(rr[0]);
            c.supports[index(Side::right)] = sup(rr[1]);
            c.supports[index(Side::left)] = sup(cr[0]);
            c.supports[index(Side::bottom)] = sup(cr[1]);
        } else {
            c.rect = {at(rr[1]).x, at(cr[1]).y, at(cr[0]).x, at(rr[0]).y};
            c.supports[index(Side::top)] = sup(rr[0]);
            c.supports[index(Side::left)] = sup(rr[1]);
            c.supports[index(Side::right)] = sup(cr[0]);
            c.supports[index(Side::bottom)] = sup(cr[1]);
        }
        out.push_back(c);
    }
    return out;
}

Solution solve_one(const Instance& inst, const SolveOptions& opt) {
    Solution sol;
    sol.smin = compute_smin(inst.reds);
    const SideBounds sides = compute_smax(sol.smin, inst.blues);
    for (Side s : kSides)
        if (!sides[index(s)]) sol.unbounded.push_back(s);
    if (!sol.unbounded.empty()) {
        sol.status = Status::unbounded;
        sol.forced_blue = count_forced(sol.smin, inst.blues);
        return sol;
    }

    const Frame frame = prune(sol.smin, sides, inst.blues);
    sol.forced_blue = frame.forced_blue;
    sol.smax = frame.smax();
    const Staircases st = build_staircases(frame, opt.presorted);
    const PointerTables ptr = precompute_pointers(st);

    std::vector<Candidate> all = enumerate_cases_1_2(frame, st, ptr);
    for (const Candidate& c : all) (c.case_tag == 1 ? sol.stats.case1 : sol.stats.case2)++;
    for (Diagonal d : {Diagonal::ne_sw, Diagonal::nw_se}) {
        const Case3Windows w = build_case3_windows(frame, st, ptr, d);
        sol.stats.case3_rows += w.matrix.rows();
        auto c3 = case3_candidates(w, opt.case3, st);
        sol.stats.case3_candidates += c3.size();
        all.insert(all.end(), c3.begin(), c3.end());
    }
    for (const auto& s : st) sol.stats.staircase_entries += s.size();
    sol.stats.annulus = frame.annulus_size();

    // Last maximum in the fixed order: Case 1, Case 2, Case 3 NE/SW, NW/SE.
    std::size_t best = 0;
    Coord best_area = rect_area(all.front().rect);
    for (std::size_t k = 1; k < all.size(); ++k) {
        Coord a = rect_area(all[k].rect);
        if (a >= best_area) {
            best = k;
            best_area = std::move(a);
        }
    }
    sol.best = all[best];
    sol.area = best_area;
    return sol;
}

}  // namespace maxsep
