#pragma once

#include <vector>

#include "tabstab/skew.hpp"

namespace tabstab {

/// Insertion (P) and recording (Q) tableaux of Schensted row insertion.
struct RskPair {
  std::vector<std::vector<int>> insertion;
  std::vector<std::vector<int>> recording;
};

/// Row-inserts the letters of w in order. Letters must be distinct.
RskPair rsk(const Word& w);

/// Shape of the insertion tableau of w.
RowSizes rsk_shape(const Word& w);

/// Recording tableau of w as rows of a straight-shape standard tableau.
std::vector<std::vector<int>> rsk_recording(const Word& w);

/// Maximum combined length of k disjoint increasing subsequences of w,
/// via the insertion shape: the sum of its first k parts.
int ell_k(const Word& w, int k);

}  // namespace tabstab
