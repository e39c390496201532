#pragma once

#include <string>
#include <vector>

namespace tabstab {

/// A word is a finite sequence of distinct positive integers.
using Word = std::vector<int>;

/// Row sizes of a tableau, top to bottom.
using RowSizes = std::vector<int>;

/// Ambient cell position. Rows are 1-based from the top, columns 1-based
/// from the left.
struct GridCell {
  int row = 0;
  int col = 0;
  friend bool operator==(const GridCell&, const GridCell&) = default;
};

/// A skew shape given by outer and inner row lengths measured from the left
/// margin. Row i (0-based here) holds cells in ambient columns
/// inner[i]+1 .. outer[i]. The lists are normally weakly decreasing, but
/// arbitrary lists are representable so that malformed attachments can be
/// run through validate_standard and rejected with a diagnostic.
struct SkewShape {
  std::vector<int> outer;
  std::vector<int> inner;

  int rows() const { return static_cast<int>(outer.size()); }
  int row_size(int i) const { return outer[i] - inner[i]; }
  int max_col() const;
  bool contains(int row, int col) const;  // 1-based, filled region only
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

/// A filling of a skew shape. entries[i] lists row i left to right.
/// Construction enforces structural consistency (list lengths, row sizes);
/// standardness is a verdict, not a construction invariant.
struct SkewTableau {
  SkewShape shape;
  std::vector<std::vector<int>> entries;

  /// Builds a tableau from inner offsets and row fillings; outer[i] is
  /// derived as inner[i] + rows[i].size(). Trailing empty rows are dropped.
  /// Throws std::invalid_argument on negative offsets or length mismatch.
  static SkewTableau make(std::vector<int> inner,
                          std::vector<std::vector<int>> rows);

  int size() const;                 // total number of entries
  int rows() const { return shape.rows(); }
  int at(int row, int col) const;   // 1-based ambient; throws if empty/out of range
  bool is_straight() const;
  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

struct Diagnostics {
  bool ok = true;
  std::string message;   // empty when ok
  GridCell cell;         // first violated cell when not ok
  explicit operator bool() const { return ok; }
};

/// True iff the filling is a standard skew tableau: the shape lists are
/// weakly decreasing with inner <= outer, entries are exactly {1..n}, rows
/// strictly increase left to right and columns strictly increase top to
/// bottom. The diagnostic names the first violated cell in row-major order.
Diagnostics validate_standard(const SkewTableau& t);

/// True iff row sizes weakly decrease from top to bottom.
bool has_weakly_decreasing_rows(const SkewTableau& t);

/// Concatenation of the rows from bottom to top, each left to right.
Word reading_word(const SkewTableau& t);

/// Attaches k-1 shifted copies of t to its right: row i keeps its inner
/// offset, copy j occupies the row_size(i) columns after copy j-1 and its
/// entries are the row entries incremented by (j-1)*n. Requires k >= 1 and
/// a standard t with weakly decreasing row sizes; throws otherwise.
SkewTableau attach_copies(const SkewTableau& t, int k);

RowSizes row_sizes(const SkewTableau& t);

}  // namespace tabstab
