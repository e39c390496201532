#pragma once

// Brute-force reference implementations kept independent of the library's
// computation paths.

#include <algorithm>
#include <set>
#include <vector>

#include "tabstab/skew.hpp"

namespace oracles {

using tabstab::Word;

// Plain exponential search: every distinct letter is assigned to one of the
// words (or dropped), values processed in increasing order so each chain is
// automatically increasing. No memoization.
inline int naive_ell_multi(const std::vector<Word>& words) {
  std::set<int> letter_set;
  for (const auto& w : words) letter_set.insert(w.begin(), w.end());
  const std::vector<int> values(letter_set.begin(), letter_set.end());

  std::vector<std::vector<int>> pos(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    pos[i].assign(values.size(), 0);
    for (size_t t = 0; t < values.size(); ++t) {
      auto it = std::find(words[i].begin(), words[i].end(), values[t]);
      if (it != words[i].end())
        pos[i][t] = static_cast<int>(it - words[i].begin()) + 1;
    }
  }

  std::vector<int> last(words.size(), 0);
  auto go = [&](auto&& self, size_t t) -> int {
    if (t == values.size()) return 0;
    int best = self(self, t + 1);
    for (size_t i = 0; i < words.size(); ++i) {
      if (pos[i][t] == 0 || pos[i][t] <= last[i]) continue;
      const int saved = last[i];
      last[i] = pos[i][t];
      best = std::max(best, 1 + self(self, t + 1));
      last[i] = saved;
    }
    return best;
  };
  return go(go, 0);
}

// Longest strictly increasing subsequence, quadratic.
inline int naive_lis(const Word& w) {
  std::vector<int> best(w.size(), 1);
  int out = w.empty() ? 0 : 1;
  for (size_t i = 0; i < w.size(); ++i) {
    for (size_t j = 0; j < i; ++j)
      if (w[j] < w[i]) best[i] = std::max(best[i], best[j] + 1);
    out = std::max(out, best[i]);
  }
  return out;
}

}  // namespace oracles
