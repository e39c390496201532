#pragma once

#include <random>
#include <vector>

#include "tabstab/skew.hpp"

namespace tabstab {

/// Result of rectifying a skew tableau. Entry provenance is tracked by
/// value: row_of[e] is the row (1-based from the top) entry e ends in,
/// origin_row_of[e] the row it occupied in the input. Index 0 is unused.
struct RectifiedTableau {
  SkewTableau tableau;            // straight shape
  RowSizes shape;
  std::vector<int> row_of;
  std::vector<int> origin_row_of;
};

/// One jeu de taquin slide into the inner corner `hole`. The hole must be a
/// maximal cell of the inner shape (its rightmost cell in that row, with no
/// inner cell below); throws std::invalid_argument otherwise.
SkewTableau inner_slide(const SkewTableau& t, GridCell hole);

/// Schützenberger rectification. Inner corners are consumed topmost first,
/// which fixes the trace; the result is order-independent.
RectifiedTableau rectify(const SkewTableau& t);

/// Rectification with a seeded random inner-corner order, for confluence
/// checks.
RectifiedTableau rectify(const SkewTableau& t, std::mt19937_64& corner_rng);

inline RowSizes shape(const RectifiedTableau& rt) { return rt.shape; }

}  // namespace tabstab
