#pragma once

#include <stdexcept>
#include <vector>

#include "tabstab/jdt.hpp"
#include "tabstab/skew.hpp"

namespace tabstab {

/// True iff every entry of [(k-1)n+1, kn] occupies the same row in
/// rectify(attach_copies(t, k)) as it does before rectifying. Requires a
/// standard t with weakly decreasing row sizes.
bool stabilizes_at(const SkewTableau& t, int k);

/// Least k at which t stabilizes. The search runs past the classical
/// max(1, 2r-2) bound so a failure of the r-row bound would surface as a
/// StabBoundError instead of being baked in.
struct StabBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
int stab_index(const SkewTableau& t);

/// Per-k verdicts and rectified shapes up to k_max, plus the index itself.
struct StabReport {
  std::vector<bool> verdicts;          // verdicts[k-1]
  std::vector<RowSizes> shapes;        // shapes[k-1] = shape of Rect(T^(k))
  int stab = 0;
};
StabReport stab_report(const SkewTableau& t, int k_max);

/// Verifies the per-row shape increment between Rect(T^(r)) and
/// Rect(T^(r-1)): row j grows by exactly the j-th row size of t.
struct IncrementCheck {
  bool ok = true;
  int failed_row = 0;  // 1-based, 0 when ok
  RowSizes shape_r;    // shape of Rect(T^(r))
  RowSizes shape_r1;   // shape of Rect(T^(r-1))
};
IncrementCheck shape_increment_check(const SkewTableau& t);

}  // namespace tabstab
