#include "tabstab/greene.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace tabstab {

int SubsequenceFamily::total_length() const {
  int n = 0;
  for (const auto& s : sequences) n += static_cast<int>(s.size());
  return n;
}

namespace {

struct EllSearch {
  const std::vector<Word>& words;
  std::vector<int> values;                       // distinct, ascending
  std::vector<std::unordered_map<int, int>> pos; // value -> 1-based position
  std::vector<uint64_t> stride;                  // state packing
  std::vector<std::vector<int>> eq_groups;       // identical words, canonicalizable
  std::unordered_map<uint64_t, int> memo;

  explicit EllSearch(const std::vector<Word>& w) : words(w) {
    std::unordered_set<int> all;
    pos.resize(words.size());
    for (size_t i = 0; i < words.size(); ++i) {
      for (size_t p = 0; p < words[i].size(); ++p) {
        if (!pos[i].emplace(words[i][p], static_cast<int>(p) + 1).second)
          throw std::invalid_argument("word has a repeated letter");
        all.insert(words[i][p]);
      }
    }
    values.assign(all.begin(), all.end());
    std::sort(values.begin(), values.end());

    stride.resize(words.size() + 1);
    stride[0] = 1;
    for (size_t i = 0; i < words.size(); ++i)
      stride[i + 1] = stride[i] * (words[i].size() + 1);

    std::vector<char> grouped(words.size(), 0);
    for (size_t i = 0; i < words.size(); ++i) {
      if (grouped[i]) continue;
      std::vector<int> g{static_cast<int>(i)};
      for (size_t j = i + 1; j < words.size(); ++j)
        if (!grouped[j] && words[j] == words[i]) {
          g.push_back(static_cast<int>(j));
          grouped[j] = 1;
        }
      if (g.size() > 1) eq_groups.push_back(std::move(g));
    }
  }

  uint64_t encode(size_t t, const std::vector<int>& state) const {
    uint64_t code = 0;
    for (size_t i = 0; i < state.size(); ++i)
      code += stride[i] * static_cast<uint64_t>(state[i]);
    return code * (values.size() + 1) + t;
  }

  // Chains of identical words are interchangeable; sorting their consumed
  // positions collapses symmetric states.
  void canonicalize(std::vector<int>& state) const {
    for (const auto& g : eq_groups) {
      std::vector<int> v;
      v.reserve(g.size());
      for (int i : g) v.push_back(state[i]);
      std::sort(v.begin(), v.end());
      for (size_t j = 0; j < g.size(); ++j) state[g[j]] = v[j];
    }
  }

  int best(size_t t, std::vector<int>& state) {
    if (t == values.size()) return 0;
    const uint64_t key = encode(t, state);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int res = best(t + 1, state);  // leave values[t] unused
    const int v = values[t];
    for (size_t i = 0; i < words.size(); ++i) {
      auto it = pos[i].find(v);
      if (it == pos[i].end() || it->second <= state[i]) continue;
      const int saved = state[i];
      state[i] = it->second;
      std::vector<int> canon = state;
      canonicalize(canon);
      res = std::max(res, 1 + best(t + 1, canon));
      state[i] = saved;
    }
    memo.emplace(key, res);
    return res;
  }

  EllResult run() {
    std::vector<int> state(words.size(), 0);
    EllResult out;
    out.witness.sequences.resize(words.size());
    {
      std::vector<int> s = state;
      canonicalize(s);
      out.value = best(0, s);
    }
    // Deterministic witness: first optimal move in (word 0, 1, ..., skip)
    // order at each value.
    int remaining = out.value;
    for (size_t t = 0; t < values.size() && remaining > 0; ++t) {
      const int v = values[t];
      bool taken = false;
      for (size_t i = 0; i < words.size() && !taken; ++i) {
        auto it = pos[i].find(v);
        if (it == pos[i].end() || it->second <= state[i]) continue;
        const int saved = state[i];
        state[i] = it->second;
        std::vector<int> canon = state;
        canonicalize(canon);
        if (1 + best(t + 1, canon) == remaining) {
          out.witness.sequences[i].push_back(v);
          remaining -= 1;
          taken = true;
        } else {
          state[i] = saved;
        }
      }
    }
    return out;
  }
};

}  // namespace

EllResult ell_multi(const std::vector<Word>& words, int cap) {
  EllSearch search(words);
  if (static_cast<int>(search.values.size()) > cap) throw OracleCapError(cap);
  return search.run();
}

std::optional<std::string> check_family(const std::vector<Word>& words,
                                        const SubsequenceFamily& family) {
  if (family.sequences.size() != words.size())
    return "family size differs from word count";
  std::unordered_set<int> used;
  for (size_t i = 0; i < words.size(); ++i) {
    const Word& s = family.sequences[i];
    for (size_t j = 1; j < s.size(); ++j)
      if (s[j] <= s[j - 1])
        return "sequence " + std::to_string(i) + " not strictly increasing";
    for (int v : s)
      if (!used.insert(v).second)
        return "letter " + std::to_string(v) + " used twice";
    size_t at = 0;
    for (int v : s) {
      while (at < words[i].size() && words[i][at] != v) ++at;
      if (at == words[i].size())
        return "sequence " + std::to_string(i) + " not a subsequence";
      ++at;
    }
  }
  return std::nullopt;
}

int splitting_point(const Word& w, const Word& a, const Word& b) {
  const int n = static_cast<int>(w.size());
  if (n == 0) throw std::invalid_argument("empty word has no splitting point");
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] <= a[i - 1]) throw std::invalid_argument("a is not increasing");
  for (size_t i = 1; i < b.size(); ++i)
    if (b[i] <= b[i - 1]) throw std::invalid_argument("b is not increasing");
  // w must be a shuffle of a and b.
  size_t ia = 0, ib = 0;
  std::unordered_set<int> in_b(b.begin(), b.end());
  for (int v : w) {
    if (ia < a.size() && a[ia] == v)
      ++ia;
    else if (ib < b.size() && b[ib] == v)
      ++ib;
    else
      throw std::invalid_argument("w is not a shuffle of a and b");
  }
  if (ia != a.size() || ib != b.size())
    throw std::invalid_argument("w is not a shuffle of a and b");
  if (a.empty() || a.front() != w.front() || a.back() != w.back())
    throw std::invalid_argument("a must contain the first and last letters");

  int prefix_max = w.front();
  for (int i = 0; i < n; ++i) {
    prefix_max = std::max(prefix_max, w[i]);
    if (in_b.count(prefix_max)) return i;  // 1-based index (i+1) minus one
  }
  return n - 1;
}

}  // namespace tabstab
