#include "tabstab/skew.hpp"

#include <algorithm>
#include <stdexcept>

namespace tabstab {

int SkewShape::max_col() const {
  int m = 0;
  for (int o : outer) m = std::max(m, o);
  return m;
}

bool SkewShape::contains(int row, int col) const {
  if (row < 1 || row > rows()) return false;
  return col > inner[row - 1] && col <= outer[row - 1];
}

SkewTableau SkewTableau::make(std::vector<int> inner,
                              std::vector<std::vector<int>> rows) {
  if (inner.size() != rows.size())
    throw std::invalid_argument("inner offsets and rows differ in length");
  while (!rows.empty() && rows.back().empty()) {
    rows.pop_back();
    inner.pop_back();
  }
  SkewTableau t;
  t.shape.inner = std::move(inner);
  t.entries = std::move(rows);
  t.shape.outer.resize(t.entries.size());
  for (size_t i = 0; i < t.entries.size(); ++i) {
    if (t.shape.inner[i] < 0)
      throw std::invalid_argument("negative inner offset");
    t.shape.outer[i] =
        t.shape.inner[i] + static_cast<int>(t.entries[i].size());
  }
  return t;
}

int SkewTableau::size() const {
  int n = 0;
  for (const auto& row : entries) n += static_cast<int>(row.size());
  return n;
}

int SkewTableau::at(int row, int col) const {
  if (!shape.contains(row, col))
    throw std::out_of_range("cell outside the filled region");
  return entries[row - 1][col - 1 - shape.inner[row - 1]];
}

bool SkewTableau::is_straight() const {
  return std::all_of(shape.inner.begin(), shape.inner.end(),
                     [](int m) { return m == 0; });
}

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

}  // namespace

Diagnostics validate_standard(const SkewTableau& t) {
  const auto& sh = t.shape;
  const int r = t.rows();
  // Cell-level strictness first so the diagnostic points at the offending
  // cell even when the shape lists are also malformed.
  for (int i = 1; i <= r; ++i) {
    for (int c = sh.inner[i - 1] + 1; c <= sh.outer[i - 1]; ++c) {
      const int v = t.at(i, c);
      if (v <= 0)
        return {false, "entry not positive", {i, c}};
      if (sh.contains(i, c - 1) && t.at(i, c - 1) >= v)
        return {false, "row " + std::to_string(i) + " not increasing", {i, c}};
      if (i > 1 && sh.contains(i - 1, c) && t.at(i - 1, c) >= v)
        return {false, "column " + std::to_string(c) + " not increasing", {i, c}};
    }
  }
  const int n = t.size();
  std::vector<char> seen(n + 1, 0);
  for (int i = 1; i <= r; ++i) {
    for (int c = sh.inner[i - 1] + 1; c <= sh.outer[i - 1]; ++c) {
      const int v = t.at(i, c);
      if (v > n)
        return {false, "entry " + std::to_string(v) + " exceeds size " +
                           std::to_string(n),
                {i, c}};
      if (seen[v])
        return {false, "entry " + std::to_string(v) + " repeated", {i, c}};
      seen[v] = 1;
    }
  }
  if (!weakly_decreasing(sh.outer))
    return {false, "outer shape not weakly decreasing", {}};
  if (!weakly_decreasing(sh.inner))
    return {false, "inner shape not weakly decreasing", {}};
  for (int i = 0; i < r; ++i)
    if (sh.inner[i] > sh.outer[i])
      return {false, "inner exceeds outer in row " + std::to_string(i + 1), {}};
  return {};
}

bool has_weakly_decreasing_rows(const SkewTableau& t) {
  for (int i = 1; i < t.rows(); ++i)
    if (t.shape.row_size(i) > t.shape.row_size(i - 1)) return false;
  return true;
}

Word reading_word(const SkewTableau& t) {
  Word w;
  w.reserve(t.size());
  for (int i = t.rows() - 1; i >= 0; --i)
    w.insert(w.end(), t.entries[i].begin(), t.entries[i].end());
  return w;
}

SkewTableau attach_copies(const SkewTableau& t, int k) {
  if (k < 1) throw std::invalid_argument("attach_copies requires k >= 1");
  if (!has_weakly_decreasing_rows(t))
    throw std::invalid_argument(
        "attach_copies requires weakly decreasing row sizes");
  if (auto d = validate_standard(t); !d)
    throw std::invalid_argument("attach_copies requires a standard tableau: " +
                                d.message);
  const int n = t.size();
  std::vector<std::vector<int>> rows(t.rows());
  for (int i = 0; i < t.rows(); ++i) {
    rows[i].reserve(static_cast<size_t>(k) * t.entries[i].size());
    for (int j = 0; j < k; ++j)
      for (int v : t.entries[i]) rows[i].push_back(v + j * n);
  }
  return SkewTableau::make(t.shape.inner, std::move(rows));
}

RowSizes row_sizes(const SkewTableau& t) {
  RowSizes s(t.rows());
  for (int i = 0; i < t.rows(); ++i) s[i] = t.shape.row_size(i);
  return s;
}

}  // namespace tabstab
