#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maxsep/geometry.hpp"
#include "maxsep/solver.hpp"

namespace maxsep {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }  // 0 when not tied to a line

private:
    std::size_t line_;
};

// CSV rows "color,x,y" with color R or B and exact coordinates (integers,
// p/q, or finite decimals); optional header, LF or CRLF. Also accepts
// {"red": [[x, y], ...], "blue": [...]} with integers or strings.
[[nodiscard]] Instance parse_points(std::string_view text);

// Canonical CSV; parse_points(dump_instance(i)) == i.
[[nodiscard]] std::string dump_instance(const Instance& inst);

enum class Format { json, tsv, svg };

[[nodiscard]] std::string emit_solution(const Solution& sol, Format fmt, const Instance* inst = nullptr);
[[nodiscard]] std::string emit_all(const std::vector<AxisRect>& rects, Format fmt, const Instance* inst = nullptr);

}  // namespace maxsep
