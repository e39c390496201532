// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "fixtures.hpp"
#include "tabstab/enumerate.hpp"
#include "tabstab/greene.hpp"
#include "tabstab/jdt.hpp"
#include "tabstab/lattice.hpp"
#include "tabstab/lemma_check.hpp"
#include "tabstab/perm.hpp"
#include "tabstab/rsk.hpp"
#include "tabstab/stab.hpp"

using namespace tabstab;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail, double seconds) {
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
              criterion, what.c_str(), seconds,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

template <typename Fn>
void criterion(int number, const std::string& what, Fn fn) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(number, what, ok, detail, seconds);
}

Word cat(std::initializer_list<Word> parts) {
  Word w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

bool check_eq(std::string& detail, const std::string& name, int got,
              int want) {
  if (got == want) return true;
  detail += name + " = " + std::to_string(got) + ", expected " +
            std::to_string(want) + "; ";
  return false;
}

int worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 2 : static_cast<int>(hw);
}

// criterion 1: worked-example goldens, exact
bool golden_examples(std::string& detail) {
  bool ok = true;
  ok &= check_eq(detail, "stab(sample_s6)", stab_index(fixtures::sample_s6()), 2);
  ok &= check_eq(detail, "stab(sample_t7)", stab_index(fixtures::sample_t7()), 3);

  const auto r9 = rectify(fixtures::sample_t9());
  if (r9.shape != RowSizes{5, 3, 1}) {
    detail += "rectified shape of sample_t9 wrong; ";
    ok = false;
  }
  const auto r93 = rectify(attach_copies(fixtures::sample_t9(), 3));
  if (r93.shape != RowSizes{13, 9, 5}) {
    detail += "rectified shape of the tripled sample_t9 wrong; ";
    ok = false;
  }

  const Word w93 = reading_word(attach_copies(fixtures::sample_t9(), 3));
  ok &= check_eq(detail, "ell_1", ell_k(w93, 1), 13);
  ok &= check_eq(detail, "ell_2", ell_k(w93, 2), 22);
  ok &= check_eq(detail, "ell_3", ell_k(w93, 3), 27);

  ok &= check_eq(detail, "ell(152643,13497)",
                 ell_multi({{1, 5, 2, 6, 4, 3}, {1, 3, 4, 9, 7}}).value, 6);
  const Word a{1, 3}, b{5, 2, 9, 4, 7}, c{6, 8};
  ok &= check_eq(detail, "ell(ABC,B)", ell_multi({cat({a, b, c}), b}).value,
                 8);
  ok &= check_eq(detail, "splitting point",
                 splitting_point({2, 3, 1, 5, 4, 7, 9, 6, 8},
                                 {2, 3, 5, 6, 8}, {1, 4, 7, 9}),
                 5);
  ok &= check_eq(detail, "stab(132)", stab_perm({1, 3, 2}), 2);
  ok &= check_eq(detail, "stab(123)", stab_perm({1, 2, 3}), 3);
  return ok;
}

TheoremSummary g_theorem_summary;

// criterion 2: exhaustive bound and monotonicity, n <= 8, r <= 4, inner <= 4
bool theorem_bound(std::string& detail) {
  g_theorem_summary = verify_main_theorem({8, 4, 4}, worker_count(), true);
  std::ostringstream os;
  os << g_theorem_summary.tableau_count << " tableaux";
  for (int r = 1; r < static_cast<int>(g_theorem_summary.max_stab_by_rows.size()); ++r)
    os << ", max stab r=" << r << ": " << g_theorem_summary.max_stab_by_rows[r];
  detail = os.str();
  if (g_theorem_summary.bound_violations != 0) {
    detail += "; bound violations " +
              std::to_string(g_theorem_summary.bound_violations);
    return false;
  }
  if (g_theorem_summary.monotonicity_violations != 0) {
    detail += "; monotonicity violations " +
              std::to_string(g_theorem_summary.monotonicity_violations);
    return false;
  }
  return true;
}

// criterion 3: per-row shape increments on the same enumeration
bool shape_increments(std::string& detail) {
  if (g_theorem_summary.tableau_count == 0)
    g_theorem_summary = verify_main_theorem({8, 4, 4}, worker_count(), true);
  detail = std::to_string(g_theorem_summary.tableau_count) + " tableaux";
  if (g_theorem_summary.increment_violations != 0) {
    detail += "; increment violations " +
              std::to_string(g_theorem_summary.increment_violations);
    return false;
  }
  return true;
}

// criterion 4: insertion-shape prefix sums equal the exact search everywhere
bool greene_equivalence(std::string& detail) {
  long long checks = 0;
  for (int n = 1; n <= 7; ++n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      const RowSizes shape = rsk_shape(w);
      int prefix = 0, k = 0;
      int exact = -1;
      for (k = 1; k <= n; ++k) {
        prefix += k <= static_cast<int>(shape.size()) ? shape[k - 1] : 0;
        exact = ell_multi(std::vector<Word>(k, w)).value;
        ++checks;
        if (prefix != exact) {
          detail = "mismatch at n=" + std::to_string(n) +
                   ", k=" + std::to_string(k);
          return false;
        }
        if (exact == n) break;  // both sides stay at n from here on
      }
      if (static_cast<int>(shape.size()) > k) {
        detail = "shape deeper than the saturation point";
        return false;
      }
    } while (std::next_permutation(w.begin(), w.end()));
  }

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int len = 1 + static_cast<int>(rng() % 12);
    std::vector<int> pool(24);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    Word w(pool.begin(), pool.begin() + len);
    const RowSizes shape = rsk_shape(w);
    int prefix = 0;
    for (int k = 1; k <= len; ++k) {
      prefix += k <= static_cast<int>(shape.size()) ? shape[k - 1] : 0;
      const int exact = ell_multi(std::vector<Word>(k, w)).value;
      ++checks;
      if (prefix != exact) {
        detail = "mismatch on a random word at k=" + std::to_string(k);
        return false;
      }
      if (exact == len) {
        if (static_cast<int>(shape.size()) > k) {
          detail = "shape deeper than the saturation point";
          return false;
        }
        break;
      }
    }
  }
  detail = std::to_string(checks) + " comparisons";
  return true;
}

// criterion 5: the seven inequality suites plus column splitting
bool lemma_suites(std::string& detail) {
  bool ok = true;
  for (const auto& name : lemma_names()) {
    if (name == "normalize") continue;  // criterion 6
    LemmaRunResult res = run_lemma_check(name, 1000, 1, 12);
    if (res.failures != 0) {
      detail += res.lemma + ": " + std::to_string(res.failures) +
                " failures, first: " + res.first_counterexample + "; ";
      ok = false;
    }
  }
  if (ok) detail = "8 suites x 1000 trials";
  return ok;
}

// criterion 6: normalization postconditions and monotonicity
bool normalization(std::string& detail) {
  LemmaRunResult res = run_lemma_check("normalize", 500, 2, 12);
  if (res.failures != 0) {
    detail = std::to_string(res.failures) +
             " failures, first: " + res.first_counterexample;
    return false;
  }
  detail = "500 families";
  return true;
}

// criterion 7: slide-order confluence
bool confluence(std::string& detail) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    SkewTableau t = random_tableau(rng, 10, 5, 4);
    std::mt19937_64 order1(rng()), order2(rng());
    const RectifiedTableau a = rectify(t, order1);
    const RectifiedTableau b = rectify(t, order2);
    if (!(a.tableau == b.tableau) || a.row_of != b.row_of) {
      detail = "different rectifications at trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "500 tableaux, two orders each";
  return true;
}

// criterion 8: stabilization is constant on recording-tableau classes
bool q_classes(std::string& detail) {
  long long classes = 0, perms = 0;
  for (int n = 1; n <= 6; ++n) {
    QClassReport rep = q_class_check(n);
    classes += static_cast<long long>(rep.classes.size());
    perms += rep.permutations;
    if (rep.violations != 0) {
      detail = "violations at n=" + std::to_string(n);
      return false;
    }
  }
  detail = std::to_string(perms) + " permutations in " +
           std::to_string(classes) + " classes";
  return true;
}

}  // namespace

int main() {
  criterion(1, "worked-example goldens", golden_examples);
  criterion(2, "stabilization bound, exhaustive n<=8 r<=4 inner<=4",
            theorem_bound);
  criterion(3, "shape increment identity on the same enumeration",
            shape_increments);
  criterion(4, "insertion shape equals the exact search for every k",
            greene_equivalence);
  criterion(5, "inequality property suites, 1000 trials each", lemma_suites);
  criterion(6, "normalization postconditions, 500 families", normalization);
  criterion(7, "slide-order confluence, 500 tableaux", confluence);
  criterion(8, "recording-class constancy, exhaustive n<=6", q_classes);

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
