#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tabstab/skew.hpp"

namespace tabstab {

inline constexpr int kDefaultOracleCap = 24;

/// Raised when an exact-oracle input exceeds the distinct-letter cap.
struct OracleCapError : std::runtime_error {
  int cap;
  explicit OracleCapError(int cap_)
      : std::runtime_error("oracle input exceeds the cap of " +
                           std::to_string(cap_) + " distinct letters"),
        cap(cap_) {}
};

/// k disjoint increasing subsequences, the i-th drawn from input word i.
struct SubsequenceFamily {
  std::vector<Word> sequences;
  int total_length() const;
};

struct EllResult {
  int value = 0;
  SubsequenceFamily witness;
};

/// Exact maximum combined length of disjoint increasing subsequences of
/// words[0], words[1], ... respectively. Words may overlap; disjointness is
/// by letter value. Memoized search over (consumed position per word)
/// states, sweeping letter values in increasing order. Witness tie-breaking
/// is deterministic: at each value the first optimal move in (word 0,
/// word 1, ..., skip) order wins.
EllResult ell_multi(const std::vector<Word>& words,
                    int cap = kDefaultOracleCap);

/// Checks the three family invariants against its source words: each
/// sequence strictly increasing, sequences pairwise disjoint by value, and
/// sequence i a subsequence of words[i]. Returns a violation message, or
/// nullopt when the family is valid.
std::optional<std::string> check_family(const std::vector<Word>& words,
                                        const SubsequenceFamily& family);

/// A splitting point of w: an index k with w_i < w_j for all i <= k < j.
/// Requires w to be a shuffle of the disjoint increasing subsequences a and
/// b, with a containing both the first and the last letter; throws
/// std::invalid_argument otherwise. Scans prefix maxima: returns one less
/// than the first index whose prefix maximum lies in b, or n-1 when every
/// prefix maximum lies in a.
int splitting_point(const Word& w, const Word& a, const Word& b);

}  // namespace tabstab
