#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tabstab/greene.hpp"
#include "tabstab/skew.hpp"

namespace tabstab {

/// Matrix coordinate, Cartesian style: col counts from the left, row from
/// the bottom, both 1-based.
struct Point {
  int col = 0;
  int row = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A monotone staircase: consecutive cells differ by one step right or up.
struct LatticePath {
  std::vector<Point> cells;

  bool valid() const;
  const Point& front() const { return cells.front(); }
  const Point& back() const { return cells.back(); }
  /// [min,max] rows occupied in a column, or nullopt when absent.
  std::optional<std::pair<int, int>> span(int col) const;
  bool contains(Point p) const;
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

struct PathFamily {
  std::vector<LatticePath> paths;
  int size() const { return static_cast<int>(paths.size()); }
};

/// The cols-by-rows grid of cell words built from a tableau: the cell at
/// (col i, row j) holds row rows-j+1 of the tableau with every letter
/// incremented by (i-1)*n.
struct PathMatrix {
  int cols = 0;
  int rows = 0;
  int n = 0;
  std::vector<Word> row_words;  // index j-1: unshifted word for matrix row j

  Word cell(int col, int row) const;
  bool in_bounds(Point p) const {
    return p.col >= 1 && p.col <= cols && p.row >= 1 && p.row <= rows;
  }
};

/// Requires a standard tableau with weakly decreasing row sizes and q >= 1.
PathMatrix build_matrix(const SkewTableau& t, int q);

/// Concatenation of the cell words along the path.
Word path_word(const PathMatrix& m, const LatticePath& p);

struct FamilyEll {
  int value = 0;
  std::vector<SubsequenceFamily> per_column;  // witnesses, column 1..cols
};

/// Maximum combined length of disjoint increasing subsequences carried by
/// the family, computed column by column (the columns are independent) and
/// summed.
FamilyEll family_ell(const PathMatrix& m, const PathFamily& f,
                     int cap = kDefaultOracleCap);

/// Cross-checks the column-by-column sum against one exact computation over
/// the whole path words. Expected to hold always.
bool column_split_check(const PathMatrix& m, const PathFamily& f,
                        int cap = kDefaultOracleCap);

/// Exchanges the parts of paths p and q after their transverse crossing in
/// `col`. Requires path p to begin weakly lower and end weakly higher than
/// path q there; throws std::invalid_argument otherwise.
PathFamily top_down_switch(const PathFamily& f, int p_index, int q_index,
                           int col);

/// Moves the [h+1..split_row] portion of the vertical run that path
/// `p_index` climbs in `col` one column to the left (h is the run's bottom
/// row). The run must be entered horizontally with the previous cell
/// (col-1, h) alone in its column; the landing cells, the entry cell and
/// the kept cell (col, split_row) must not touch any other family member.
PathFamily left_shift(const PathFamily& f, int p_index, int col,
                      int split_row);

/// Reroutes path p off the horizontal segment (col_a..col_b, row) it shares
/// with path q: p now rises at col_a and rejoins at (col_b, row+1). Path p
/// must continue up at (col_b, row) and leave the segment's end column
/// weakly above q.
PathFamily rectangular_flip(const PathFamily& f, int p_index, int q_index,
                            int row, int col_a, int col_b);

/// The mirror image at path ends: p entered the shared segment from below
/// at (col_a, row-1), weakly below q there; it is rerouted along row-1 to
/// (col_b, row-1), then up.
PathFamily reverse_rectangular_flip(const PathFamily& f, int p_index,
                                    int q_index, int row, int col_a,
                                    int col_b);

/// The lower-boundary staircases L_1..L_k (top to bottom): walk the row
/// k-i+1 to column i, alternate up/right steps to (r-k+i-1, r-i+1), then
/// run to (q, r-i+1). Requires q >= r >= k >= 1; throws std::domain_error
/// otherwise.
std::vector<LatticePath> bounding_paths(int q, int r, int k);

/// True iff a is weakly above b: at every column both occupy, a's span
/// dominates b's (componentwise min and max).
bool weakly_above(const LatticePath& a, const LatticePath& b);

/// True iff no pair of family members crosses transversally anywhere.
bool family_is_ordered(const PathFamily& f);

/// Rewrites the family into the canonical form the maximizing argument
/// uses: path i starts at (1, k+1-i), the paths are ordered top to bottom
/// without transverse crossings, path i stays weakly above the bounding
/// path L_i and contains the terminal horizontal segment
/// (max(1, r-k+i-1)..q, r-i+1). Composed of path extensions, top-down
/// switches, left-shifts and (reverse) rectangular flips only, so the
/// family invariant never decreases. Requires q >= r >= k.
PathFamily normalize_family(const PathMatrix& m, const PathFamily& f);

}  // namespace tabstab
