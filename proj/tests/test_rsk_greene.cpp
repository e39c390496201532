#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tabstab/greene.hpp"
#include "tabstab/rsk.hpp"
#include "tabstab/skew.hpp"

using namespace tabstab;

namespace {

Word cat(std::initializer_list<Word> parts) {
  Word w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

}  // namespace

TEST_SUITE_BEGIN("greene");

TEST_CASE("insertion shapes") {
  CHECK(rsk_shape({2, 7, 3, 5, 9, 1, 4, 6, 8}) == RowSizes{5, 3, 1});
  CHECK(rsk_shape({1, 2, 3, 4, 5}) == RowSizes{5});
  CHECK(rsk_shape(reading_word(attach_copies(fixtures::sample_s6(), 3))) ==
        RowSizes{8, 6, 4});
}

TEST_CASE("recording tableaux") {
  CHECK(rsk_recording({1, 2, 3}) ==
        std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(rsk_recording({3, 2, 1}) ==
        std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(rsk_recording({1, 3, 2}) ==
        std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("combined subsequence lengths via the insertion shape") {
  const Word w{2, 7, 3, 5, 9, 1, 4, 6, 8};
  CHECK(ell_k(w, 1) == 5);
  CHECK(ell_k(w, 2) == 8);
  CHECK(ell_k(w, 3) == 9);
  CHECK(ell_k({1, 2, 3, 4}, 2) == 4);
}

TEST_CASE("exact search on the worked pairs") {
  auto r = ell_multi({{1, 5, 2, 6, 4, 3}, {1, 3, 4, 9, 7}});
  CHECK(r.value == 6);
  CHECK(!check_family({{1, 5, 2, 6, 4, 3}, {1, 3, 4, 9, 7}}, r.witness));

  const Word a{1, 3}, b{5, 2, 9, 4, 7}, c{6, 8};
  CHECK(ell_multi({cat({a, b, c}), b}).value == 8);
}

TEST_CASE("an empty word contributes nothing") {
  const Word w{3, 1, 4, 2};
  CHECK(ell_multi({{}, w}).value == ell_k(w, 1));
}

TEST_CASE("witnesses are valid and deterministic") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int total = 4 + static_cast<int>(rng() % 7);
    Word seq(total);
    std::iota(seq.begin(), seq.end(), 1);
    std::shuffle(seq.begin(), seq.end(), rng);
    const size_t cut = rng() % (total + 1);
    std::vector<Word> words{Word(seq.begin(), seq.begin() + cut),
                            Word(seq.begin() + cut, seq.end())};
    auto r1 = ell_multi(words);
    auto r2 = ell_multi(words);
    CHECK(!check_family(words, r1.witness));
    CHECK(r1.witness.sequences == r2.witness.sequences);
    CHECK(r1.witness.total_length() == r1.value);
  }
}

TEST_CASE("memoized search agrees with plain enumeration") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const int total = 3 + static_cast<int>(rng() % 8);  // <= 10 letters
    Word seq(total);
    std::iota(seq.begin(), seq.end(), 1);
    std::shuffle(seq.begin(), seq.end(), rng);
    std::vector<Word> words;
    const int k = 1 + static_cast<int>(rng() % 3);
    size_t at = 0;
    for (int i = 0; i < k; ++i) {
      size_t len = rng() % (total - at + 1);
      if (i == k - 1) len = total - at;
      words.emplace_back(seq.begin() + at, seq.begin() + at + len);
      at += len;
    }
    // overlap: sometimes repeat a word
    if (rng() % 2) words.push_back(words[rng() % words.size()]);
    CHECK(ell_multi(words).value == oracles::naive_ell_multi(words));
  }
  // a few instances at the full 12-letter budget
  for (int trial = 0; trial < 10; ++trial) {
    Word seq(12);
    std::iota(seq.begin(), seq.end(), 1);
    std::shuffle(seq.begin(), seq.end(), rng);
    const size_t cut = 3 + rng() % 7;
    std::vector<Word> words{Word(seq.begin(), seq.begin() + cut),
                            Word(seq.begin() + cut, seq.end())};
    CHECK(ell_multi(words).value == oracles::naive_ell_multi(words));
  }
}

TEST_CASE("single-word search matches the quadratic subsequence bound") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const int total = 1 + static_cast<int>(rng() % 9);
    Word w(total);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    CHECK(ell_multi({w}).value == oracles::naive_lis(w));
  }
}

TEST_CASE("greene agreement on small exhaustive permutations") {
  for (int n = 1; n <= 5; ++n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
      for (int k = 1; k <= n; ++k)
        CHECK(ell_k(w, k) == ell_multi(std::vector<Word>(k, w)).value);
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("the distinct-letter cap is enforced") {
  Word w(25);
  std::iota(w.begin(), w.end(), 1);
  CHECK_THROWS_AS(ell_multi({w}), OracleCapError);
  CHECK_NOTHROW(ell_multi({w}, 30));
}

TEST_CASE("insertion shapes are partitions summing to the length") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int total = 1 + static_cast<int>(rng() % 10);
    Word w(total);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    const RowSizes s = rsk_shape(w);
    int sum = 0;
    for (size_t i = 0; i < s.size(); ++i) {
      sum += s[i];
      if (i) CHECK(s[i] <= s[i - 1]);
    }
    CHECK(sum == total);
  }
}

TEST_CASE("splitting points of the worked shuffles") {
  CHECK(splitting_point({2, 3, 1, 5, 4, 7, 9, 6, 8}, {2, 3, 5, 6, 8},
                        {1, 4, 7, 9}) == 5);
  CHECK(splitting_point({1, 3, 5, 2, 4, 7, 6, 8}, {1, 3, 5, 6, 8},
                        {2, 4, 7}) == 5);
}

TEST_CASE("splitting points satisfy their definition") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const int total = 1 + static_cast<int>(rng() % 10);
    // draw a shuffle of two increasing sequences with a owning both ends
    std::vector<int> values(total);
    std::iota(values.begin(), values.end(), 1);
    Word w, a, b;
    // assign each value to a or b, then shuffle-merge randomly
    std::vector<int> owner(total);
    for (int i = 0; i < total; ++i) owner[i] = static_cast<int>(rng() % 2);
    for (int i = 0; i < total; ++i)
      (owner[i] ? b : a).push_back(values[i]);
    size_t ia = 0, ib = 0;
    while (ia < a.size() || ib < b.size()) {
      const bool from_a =
          ib == b.size() || (ia < a.size() && rng() % 2 == 0);
      w.push_back(from_a ? a[ia++] : b[ib++]);
    }
    if (a.empty() || w.front() != a.front() || w.back() != a.back())
      continue;  // precondition does not hold; skip
    const int k = splitting_point(w, a, b);
    REQUIRE(k >= 0);
    REQUIRE(k <= total);
    for (int i = 0; i < k; ++i)
      for (int j = k; j < total; ++j) CHECK(w[i] < w[j]);
  }
}

TEST_CASE("an increasing word splits everywhere the scan lands") {
  const Word w{1, 2, 3, 4, 5};
  const int k = splitting_point(w, {1, 2, 5}, {3, 4});
  CHECK(k <= 4);
  for (int i = 0; i < k; ++i)
    for (int j = k; j < 5; ++j) CHECK(w[i] < w[j]);
}

TEST_CASE("splitting point rejects bad partitions") {
  CHECK_THROWS_AS(splitting_point({2, 1}, {1}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(splitting_point({1, 2}, {2, 1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(splitting_point({1, 3, 2}, {1, 2}, {4}),
                  std::invalid_argument);
}

TEST_SUITE_END();
