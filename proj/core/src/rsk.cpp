#include "tabstab/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace tabstab {

RskPair rsk(const Word& w) {
  RskPair out;
  for (size_t step = 0; step < w.size(); ++step) {
    int x = w[step];
    size_t r = 0;
    while (true) {
      if (r == out.insertion.size()) {
        out.insertion.emplace_back();
        out.recording.emplace_back();
      }
      auto& row = out.insertion[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        out.recording[r].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  return out;
}

RowSizes rsk_shape(const Word& w) {
  auto pq = rsk(w);
  RowSizes s(pq.insertion.size());
  for (size_t i = 0; i < pq.insertion.size(); ++i)
    s[i] = static_cast<int>(pq.insertion[i].size());
  return s;
}

std::vector<std::vector<int>> rsk_recording(const Word& w) {
  return rsk(w).recording;
}

int ell_k(const Word& w, int k) {
  if (k < 1) throw std::invalid_argument("ell_k requires k >= 1");
  auto s = rsk_shape(w);
  int total = 0;
  for (int i = 0; i < k && i < static_cast<int>(s.size()); ++i) total += s[i];
  return total;
}

}  // namespace tabstab
