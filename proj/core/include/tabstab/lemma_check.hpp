#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tabstab/lattice.hpp"
#include "tabstab/skew.hpp"

namespace tabstab {

/// Seeded generators used by the property suites.
SkewTableau random_tableau(std::mt19937_64& rng, int max_n, int max_rows,
                           int max_inner);
LatticePath random_path(std::mt19937_64& rng, int cols, int rows);

struct LemmaRunResult {
  std::string lemma;
  int trials = 0;
  int failures = 0;
  std::string first_counterexample;  // empty when none
};

/// Names accepted by run_lemma_check: lis1, start-split, end-split, tds,
/// left-shift, rect-flip, rev-rect-flip, column-split, normalize.
const std::vector<std::string>& lemma_names();

/// Runs `trials` seeded random legal instances of the named inequality or
/// identity and counts violations (none expected). `max_letters` bounds the
/// combined alphabet of the word lemmas; the path lemmas draw their
/// matrices from random tableaux of size up to min(6, max_letters / 2).
LemmaRunResult run_lemma_check(const std::string& lemma, int trials,
                               uint64_t seed, int max_letters);

}  // namespace tabstab
