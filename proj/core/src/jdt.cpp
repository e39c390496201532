#include "tabstab/jdt.hpp"

#include <stdexcept>

namespace tabstab {

namespace {

// Mutable grid view used while sliding. Cells hold 0 when empty.
struct Grid {
  std::vector<int> inner, outer;
  std::vector<std::vector<int>> cells;  // cells[i][c], 0-based, ambient width

  explicit Grid(const SkewTableau& t)
      : inner(t.shape.inner), outer(t.shape.outer) {
    const int width = t.shape.max_col();
    cells.assign(t.rows(), std::vector<int>(width, 0));
    for (int i = 0; i < t.rows(); ++i)
      for (int c = inner[i]; c < outer[i]; ++c)
        cells[i][c] = t.entries[i][c - inner[i]];
  }

  int rows() const { return static_cast<int>(inner.size()); }

  bool filled(int i, int c) const {  // 0-based
    return i >= 0 && i < rows() && c >= inner[i] && c < outer[i];
  }

  // 0-based row of the inner corner, or -1.
  bool is_corner(int i, int c) const {
    if (i < 0 || i >= rows()) return false;
    if (inner[i] == 0 || c != inner[i] - 1) return false;
    return i + 1 >= rows() || inner[i + 1] <= c;
  }

  // Slides the hole at inner corner row i until it exits at an outer corner.
  void slide(int i) {
    int c = inner[i] - 1;
    inner[i] -= 1;
    while (true) {
      const bool below = filled(i + 1, c);
      const bool right = filled(i, c + 1);
      if (!below && !right) break;
      if (below && (!right || cells[i + 1][c] < cells[i][c + 1])) {
        cells[i][c] = cells[i + 1][c];
        cells[i + 1][c] = 0;
        ++i;
      } else {
        cells[i][c] = cells[i][c + 1];
        cells[i][c + 1] = 0;
        ++c;
      }
    }
    outer[i] = c;  // hole exits at the end of row i
  }

  SkewTableau to_tableau() const {
    std::vector<std::vector<int>> rows_(rows());
    for (int i = 0; i < rows(); ++i)
      rows_[i].assign(cells[i].begin() + inner[i], cells[i].begin() + outer[i]);
    return SkewTableau::make(inner, std::move(rows_));
  }
};

template <typename PickCorner>
RectifiedTableau rectify_impl(const SkewTableau& t, PickCorner pick) {
  const int n = t.size();
  RectifiedTableau out;
  out.origin_row_of.assign(n + 1, 0);
  for (int i = 0; i < t.rows(); ++i)
    for (int v : t.entries[i]) out.origin_row_of[v] = i + 1;

  Grid g(t);
  while (true) {
    std::vector<int> corners;
    for (int i = 0; i < g.rows(); ++i)
      if (g.inner[i] > 0 && g.is_corner(i, g.inner[i] - 1)) corners.push_back(i);
    if (corners.empty()) break;
    g.slide(pick(corners));
  }

  out.tableau = g.to_tableau();
  out.shape = row_sizes(out.tableau);
  out.row_of.assign(n + 1, 0);
  for (int i = 0; i < out.tableau.rows(); ++i)
    for (int v : out.tableau.entries[i]) out.row_of[v] = i + 1;
  return out;
}

}  // namespace

SkewTableau inner_slide(const SkewTableau& t, GridCell hole) {
  Grid g(t);
  if (!g.is_corner(hole.row - 1, hole.col - 1))
    throw std::invalid_argument("hole is not an inner corner");
  g.slide(hole.row - 1);
  return g.to_tableau();
}

RectifiedTableau rectify(const SkewTableau& t) {
  return rectify_impl(t, [](const std::vector<int>& corners) {
    return corners.front();  // topmost
  });
}

RectifiedTableau rectify(const SkewTableau& t, std::mt19937_64& corner_rng) {
  return rectify_impl(t, [&corner_rng](const std::vector<int>& corners) {
    std::uniform_int_distribution<size_t> d(0, corners.size() - 1);
    return corners[d(corner_rng)];
  });
}

}  // namespace tabstab
