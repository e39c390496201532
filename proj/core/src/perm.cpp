#include "tabstab/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "tabstab/rsk.hpp"
#include "tabstab/stab.hpp"

namespace tabstab {

bool is_permutation(const Permutation& w) {
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : w) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

SkewTableau tableau_from_permutation(const Permutation& w) {
  if (!is_permutation(w)) throw std::invalid_argument("not a permutation");
  const int n = static_cast<int>(w.size());
  std::vector<int> inner(n);
  std::vector<std::vector<int>> rows(n);
  for (int i = 0; i < n; ++i) {
    inner[i] = n - 1 - i;
    rows[i] = {w[n - 1 - i]};  // row i from the top reads w_{n-i}
  }
  return SkewTableau::make(std::move(inner), std::move(rows));
}

int stab_perm(const Permutation& w) {
  return stab_index(tableau_from_permutation(w));
}

int ascent_count(const Permutation& w) {
  int a = 0;
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) ++a;
  return a;
}

std::string rows_to_string(const std::vector<std::vector<int>>& rows) {
  std::string s;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += '/';
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(rows[i][j]);
    }
  }
  return s;
}

QClassReport q_class_check(int n, int budget) {
  if (n < 1 || n > budget)
    throw std::invalid_argument("exhaustive scan budget exceeded");
  QClassReport rep;
  rep.n = n;

  struct Acc {
    int stab = -1;
    long long size = 0;
    int min_ascents = 0;
    long long violations = 0;
  };
  std::map<std::string, Acc> classes;

  Permutation w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    rep.permutations += 1;
    const std::string key = rows_to_string(rsk_recording(w));
    const int s = stab_perm(w);
    const int a = ascent_count(w);
    auto& acc = classes[key];
    if (acc.stab == -1) {
      acc.stab = s;
      acc.min_ascents = a;
    } else {
      if (acc.stab != s) acc.violations += 1;
      acc.min_ascents = std::min(acc.min_ascents, a);
    }
    acc.size += 1;
  } while (std::next_permutation(w.begin(), w.end()));

  for (auto& [key, acc] : classes) {
    rep.classes.push_back({key, acc.stab, acc.size, acc.min_ascents});
    rep.violations += acc.violations;
  }
  return rep;
}

}  // namespace tabstab
