#pragma once

#include <string>
#include <vector>

#include "tabstab/skew.hpp"

namespace tabstab {

/// One-line notation, a bijection on {1..n}.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& w);

/// The antidiagonal staircase with one box per row and reading word w:
/// outer = (n, n-1, ..., 1), inner = (n-1, ..., 0), the row i-th from the
/// bottom sitting in column i.
SkewTableau tableau_from_permutation(const Permutation& w);

/// Stabilization index of the one-box-per-row tableau of w.
int stab_perm(const Permutation& w);

int ascent_count(const Permutation& w);

/// Canonical string for a straight-shape tableau given by rows, e.g.
/// "1,2/3".
std::string rows_to_string(const std::vector<std::vector<int>>& rows);

struct QClass {
  std::string q_string;
  int stab = 0;          // common value on the class
  long long size = 0;
  int min_ascents = 0;   // empirical record, no assertion attached
};

struct QClassReport {
  int n = 0;
  long long permutations = 0;
  std::vector<QClass> classes;
  long long violations = 0;  // members whose stab differs from the class
};

/// Groups S_n by recording tableau and checks that the stabilization index
/// is constant on every class. Exhaustive; n is capped (default budget 6).
QClassReport q_class_check(int n, int budget = 6);

}  // namespace tabstab
