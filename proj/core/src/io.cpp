#include "tabstab/io.hpp"

#include <sstream>

#include "json.hpp"

namespace tabstab {

SkewTableau parse_tableau_text(const std::string& text) {
  std::vector<int> inner;
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    int dots = 0, tokno = 0;
    std::vector<int> row;
    while (ls >> tok) {
      ++tokno;
      if (tok == ".") {
        if (!row.empty())
          throw ParseError("inner cell after an entry", lineno, tokno);
        ++dots;
        continue;
      }
      try {
        size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size() || v <= 0)
          throw ParseError("expected a positive integer or '.', got '" + tok +
                               "'",
                           lineno, tokno);
        row.push_back(v);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception&) {
        throw ParseError(
            "expected a positive integer or '.', got '" + tok + "'", lineno,
            tokno);
      }
    }
    if (dots == 0 && row.empty()) continue;  // blank line
    inner.push_back(dots);
    rows.push_back(std::move(row));
  }
  return SkewTableau::make(std::move(inner), std::move(rows));
}

std::string emit_tableau_text(const SkewTableau& t) {
  std::string out;
  for (int i = 0; i < t.rows(); ++i) {
    std::string line;
    for (int d = 0; d < t.shape.inner[i]; ++d) line += line.empty() ? "." : " .";
    for (int v : t.entries[i]) {
      if (!line.empty()) line += ' ';
      line += std::to_string(v);
    }
    out += line;
    out += '\n';
  }
  return out;
}

SkewTableau parse_tableau_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what(), 0, 0);
  }
  if (!j.is_object() || !j.contains("inner") || !j.contains("rows"))
    throw ParseError("expected {\"inner\":[...],\"rows\":[[...]]}", 0, 0);
  try {
    std::vector<int> inner = j["inner"].get<std::vector<int>>();
    std::vector<std::vector<int>> rows =
        j["rows"].get<std::vector<std::vector<int>>>();
    return SkewTableau::make(std::move(inner), std::move(rows));
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad tableau JSON: ") + e.what(), 0, 0);
  }
}

std::string emit_tableau_json(const SkewTableau& t) {
  nlohmann::ordered_json j;
  j["inner"] = t.shape.inner;
  j["rows"] = t.entries;
  return j.dump();
}

}  // namespace tabstab
