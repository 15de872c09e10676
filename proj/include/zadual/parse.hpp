#pragma once

#include <string>
#include <string_view>

#include "zadual/types.hpp"

namespace zadual {

// Parses a header line ("group ...", "rho ...", "sigma ..."). Returns false
// if the line is not a header line (it is then an expression).
bool parse_header_line(std::string_view line, RhoTable& table, GroupKind& group,
                       bool& group_seen);

// Parses one representation expression against the declarations. The result
// is canonical and validated. Errors carry the 1-based column.
LanglandsDatum parse_rep(std::string_view text, const RhoTable& table, GroupKind group);

// Canonical text form; inverse of parse_rep under the same declarations.
std::string format_rep(const LanglandsDatum& d, const RhoTable& table);

// JSON mirror (fields: group, segments[{rho,x2,y2}], temp{sigma, blocks}).
LanglandsDatum parse_rep_json(std::string_view json_text, const RhoTable& table);
std::string format_rep_json(const LanglandsDatum& d);

std::string format_point(const Rho& rho, HalfInt x, const RhoTable& table);

} // namespace zadual
