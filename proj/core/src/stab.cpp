#include "tabstab/stab.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tabstab {

bool stabilizes_at(const SkewTableau& t, int k) {
  if (k < 1) throw std::invalid_argument("stabilizes_at requires k >= 1");
  const int n = t.size();
  if (n == 0) return true;
  RectifiedTableau rt = rectify(attach_copies(t, k));
  for (int e = (k - 1) * n + 1; e <= k * n; ++e)
    if (rt.row_of[e] != rt.origin_row_of[e]) return false;
  return true;
}

int stab_index(const SkewTableau& t) {
  const int r = t.rows();
  if (t.size() == 0) return 1;
  const int cap = std::max(2 * r - 2, r) + 1;
  for (int k = 1; k <= cap; ++k) {
    if (stabilizes_at(t, k)) {
      if (k > r)
        throw StabBoundError("stabilization index " + std::to_string(k) +
                             " exceeds the row count " + std::to_string(r));
      return k;
    }
  }
  throw StabBoundError("no stabilization up to k = " + std::to_string(cap));
}

StabReport stab_report(const SkewTableau& t, int k_max) {
  StabReport rep;
  rep.verdicts.resize(k_max);
  rep.shapes.resize(k_max);
  const int n = t.size();
  for (int k = 1; k <= k_max; ++k) {
    if (n == 0) {
      rep.verdicts[k - 1] = true;
      continue;
    }
    RectifiedTableau rt = rectify(attach_copies(t, k));
    rep.shapes[k - 1] = rt.shape;
    bool ok = true;
    for (int e = (k - 1) * n + 1; e <= k * n && ok; ++e)
      ok = rt.row_of[e] == rt.origin_row_of[e];
    rep.verdicts[k - 1] = ok;
  }
  rep.stab = 0;
  for (int k = 1; k <= k_max; ++k)
    if (rep.verdicts[k - 1]) {
      rep.stab = k;
      break;
    }
  return rep;
}

IncrementCheck shape_increment_check(const SkewTableau& t) {
  IncrementCheck out;
  const int r = t.rows();
  if (r == 0) return out;
  out.shape_r = rectify(attach_copies(t, r)).shape;
  if (r > 1) out.shape_r1 = rectify(attach_copies(t, r - 1)).shape;
  const RowSizes lambda = row_sizes(t);
  for (int j = 0; j < r; ++j) {
    const int before =
        j < static_cast<int>(out.shape_r1.size()) ? out.shape_r1[j] : 0;
    const int after =
        j < static_cast<int>(out.shape_r.size()) ? out.shape_r[j] : 0;
    if (after - before != lambda[j]) {
      out.ok = false;
      out.failed_row = j + 1;
      return out;
    }
  }
  return out;
}

}  // namespace tabstab
