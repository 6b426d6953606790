#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "maxsep/bounding.hpp"
#include "maxsep/matrix_engine.hpp"
#include "maxsep/staircase.hpp"

namespace maxsep {

enum class Diagonal : unsigned char { none, ne_sw, nw_se };

// A side's support: the blue point it rests on, or nullopt for an smax wall.
using Support = std::optional<Point>;

struct Candidate {
    AxisRect rect;
    std::array<Support, 4> supports;  // indexed by Side
    int case_tag = 1;
    Diagonal diagonal = Diagonal::none;
};

struct SupportRef {
    Quadrant quadrant;
    std::size_t entry;
};

// Case-3 matrix of one diagonal plus the staircase entries behind each row
// and column. For NW/SE the matrix is built in mirrored x so that it has the
// same shape as NE/SW.
struct Case3Windows {
    Diagonal diagonal = Diagonal::ne_sw;
    StaircaseMatrix matrix;
    std::vector<std::array<SupportRef, 2>> row_refs;  // top, right (NE/SW) or top, left (NW/SE)
    std::vector<std::array<SupportRef, 2>> col_refs;  // left, bottom (NE/SW) or right, bottom (NW/SE)
};

enum class Case3Search : unsigned char {
    exact,           // window_maxima: band decomposition into fully defined blocks
    padded_smawk  // SMAWK over the zero-left / negative-right padded matrix
};

struct SolveOptions {
    bool presorted = false;
    Case3Search case3 = Case3Search::exact;
};

struct SolveStats {
    std::size_t case1 = 0;
    std::size_t case2 = 0;
    std::size_t case3_rows = 0;
    std::size_t case3_candidates = 0;
    std::size_t staircase_entries = 0;
    std::size_t annulus = 0;
};

enum class Status : unsigned char { bounded, unbounded };

struct Solution {
    Status status = Status::bounded;
    std::vector<Side> unbounded;
    Candidate best;
    Coord area;
    std::size_t forced_blue = 0;
    AxisRect smin;
    std::optional<AxisRect> smax;
    SolveStats stats;
};

class UnboundedError : public std::runtime_error {
public:
    explicit UnboundedError(std::vector<Side> sides);
    [[nodiscard]] const std::vector<Side>& sides() const noexcept { return sides_; }

private:
    std::vector<Side> sides_;
};

[[nodiscard]] std::vector<Candidate> enumerate_cases_1_2(const Frame& frame, const Staircases& st,
                                                         const PointerTables& ptr);
[[nodiscard]] Case3Windows build_case3_windows(const Frame& frame, const Staircases& st, const PointerTables& ptr,
                                               Diagonal diagonal);
// Candidates from the row maxima of a Case-3 matrix, in row order.
[[nodiscard]] std::vector<Candidate> case3_candidates(const Case3Windows& w, Case3Search search,
                                                      const Staircases& st, EvalCounter* counter = nullptr);

[[nodiscard]] Solution solve_one(const Instance& inst, const SolveOptions& opt = {});

struct SolveAllOptions {
    bool all_maximal = false;  // every maximal separating rectangle, not only the largest
};

// Sorted by (xmin, ymin, xmax, ymax). Throws UnboundedError.
[[nodiscard]] std::vector<AxisRect> solve_all(const Instance& inst, const SolveAllOptions& opt = {});

}  // namespace maxsep
