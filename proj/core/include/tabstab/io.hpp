#pragma once

#include <stdexcept>
#include <string>

#include "tabstab/skew.hpp"

namespace tabstab {

struct ParseError : std::runtime_error {
  int line = 0;  // 1-based
  int col = 0;   // 1-based token position
  ParseError(std::string msg, int line_, int col_)
      : std::runtime_error(std::move(msg)), line(line_), col(col_) {}
};

/// Text format: one line per row, top row first; "." for each leading inner
/// cell, then the entries, separated by single spaces. Parsing accepts any
/// whitespace separation and blank trailing lines.
SkewTableau parse_tableau_text(const std::string& text);
std::string emit_tableau_text(const SkewTableau& t);

/// JSON mirror: {"inner":[...],"rows":[[...],...]}.
SkewTableau parse_tableau_json(const std::string& text);
std::string emit_tableau_json(const SkewTableau& t);

}  // namespace tabstab
