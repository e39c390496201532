#pragma once

#include "tabstab/skew.hpp"

namespace fixtures {

using tabstab::SkewTableau;

// three rows, n = 6, row sizes (2,2,2); stabilizes at 2
inline SkewTableau sample_s6() {
  return SkewTableau::make({2, 2, 0}, {{1, 3}, {5, 6}, {2, 4}});
}

// three rows, n = 7, row sizes (3,2,2); stabilizes at 3
inline SkewTableau sample_t7() {
  return SkewTableau::make({3, 2, 0}, {{4, 5, 6}, {3, 7}, {1, 2}});
}

// three rows, n = 9, reading word 273591468
inline SkewTableau sample_t9() {
  return SkewTableau::make({2, 1, 0}, {{1, 4, 6, 8}, {3, 5, 9}, {2, 7}});
}

}  // namespace fixtures
