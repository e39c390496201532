#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tabstab/skew.hpp"

namespace tabstab {

/// Bounds for exhaustive tableau enumeration. Skew shapes are generated
/// with weakly decreasing row sizes and inner offsets deduplicated up to
/// translation (the bottom offset is pinned at zero).
struct EnumBounds {
  int max_n = 6;
  int max_rows = 3;
  int max_inner = 3;
};

/// Every (outer, inner) skew shape within the bounds, in a fixed order.
std::vector<SkewShape> enumerate_shapes(const EnumBounds& bounds);

/// Every standard filling of the shape, in a fixed order.
void for_each_standard_filling(const SkewShape& shape,
                               const std::function<void(const SkewTableau&)>& fn);

/// Stable 64-bit hash of the shape and entry sequence, for CSV output.
uint64_t tableau_hash(const SkewTableau& t);

/// One enumerated tableau's result line.
struct TableauRecord {
  SkewTableau tableau;
  int stab = 0;
  std::vector<bool> verdicts;  // k = 1 .. rows+2
};

/// Exhaustive verification summary over the bounded enumeration.
struct TheoremSummary {
  long long tableau_count = 0;
  std::vector<int> max_stab_by_rows;     // index r, entry 0 unused
  long long bound_violations = 0;        // stab > r
  long long monotonicity_violations = 0; // stabilizes at k but not k+1
  long long increment_violations = 0;    // per-row shape increment != lambda
};

/// Enumerates every standard skew tableau with weakly decreasing row sizes
/// within the bounds, fanning shapes out to `jobs` workers. For each
/// tableau: computes stabilizes_at for k = 1..r+2, the stab index, the
/// r-row bound check, the monotonicity record and (optionally) the shape
/// increment identity. `record_sink`, when set, receives every tableau in a
/// deterministic order.
TheoremSummary verify_main_theorem(
    const EnumBounds& bounds, int jobs, bool check_increment,
    const std::function<void(const TableauRecord&)>& record_sink = nullptr);

}  // namespace tabstab
