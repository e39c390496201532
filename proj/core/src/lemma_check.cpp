#include "tabstab/lemma_check.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tabstab/greene.hpp"

namespace tabstab {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

SkewTableau random_tableau(std::mt19937_64& rng, int max_n, int max_rows,
                           int max_inner) {
  const int n = uniform(rng, 1, max_n);
  const int r = uniform(rng, 1, std::min(max_rows, n));
  // weakly decreasing positive row sizes summing to n
  std::vector<int> lambda(r);
  int remaining = n, prev = n;
  for (int i = 0; i < r; ++i) {
    const int left = r - i;
    const int lo = (remaining + left - 1) / left;
    const int hi = std::min(prev, remaining - (left - 1));
    lambda[i] = uniform(rng, lo, hi);
    prev = lambda[i];
    remaining -= lambda[i];
  }
  std::vector<int> inner(r, 0);
  for (int i = r - 2; i >= 0; --i)
    inner[i] = uniform(rng, inner[i + 1], max_inner);

  std::vector<std::vector<int>> rows(r);
  std::vector<int> filled(r, 0);
  for (int e = 1; e <= n; ++e) {
    std::vector<int> addable;
    for (int i = 0; i < r; ++i) {
      if (filled[i] == lambda[i]) continue;
      const int col = inner[i] + filled[i] + 1;
      if (i > 0 && col > inner[i - 1] && col > inner[i - 1] + filled[i - 1])
        continue;
      addable.push_back(i);
    }
    const int i = addable[uniform(rng, 0, static_cast<int>(addable.size()) - 1)];
    rows[i].push_back(e);
    filled[i] += 1;
  }
  return SkewTableau::make(std::move(inner), std::move(rows));
}

LatticePath random_path(std::mt19937_64& rng, int cols, int rows) {
  LatticePath p;
  int col = uniform(rng, 1, cols);
  int row = uniform(rng, 1, rows);
  p.cells.push_back({col, row});
  while (true) {
    const bool can_right = col < cols, can_up = row < rows;
    if (!can_right && !can_up) break;
    if (uniform(rng, 0, 3) == 0) break;
    if (can_right && (!can_up || uniform(rng, 0, 1) == 0))
      p.cells.push_back({++col, row});
    else
      p.cells.push_back({col, ++row});
  }
  return p;
}

namespace {

std::string word_str(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

std::string words_str(const std::vector<Word>& ws) {
  std::string s;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) s += " | ";
    s += word_str(ws[i]);
  }
  return s;
}

std::string family_str(const PathFamily& f) {
  std::ostringstream os;
  for (const auto& p : f.paths) {
    for (const auto& c : p.cells) os << "(" << c.col << "," << c.row << ")";
    os << "; ";
  }
  return os.str();
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

struct WordInstance {
  Word a, b, c;
  std::vector<Word> extras;
};

WordInstance make_words(std::mt19937_64& rng, int max_letters) {
  const int total = uniform(rng, 3, max_letters);
  std::vector<int> seq(total);
  std::iota(seq.begin(), seq.end(), 1);
  std::shuffle(seq.begin(), seq.end(), rng);
  const int cut1 = uniform(rng, 0, total);
  const int cut2 = uniform(rng, cut1, total);
  WordInstance inst;
  inst.a.assign(seq.begin(), seq.begin() + cut1);
  inst.b.assign(seq.begin() + cut1, seq.begin() + cut2);
  inst.c.assign(seq.begin() + cut2, seq.end());
  const int m = uniform(rng, 0, 2);
  for (int i = 0; i < m; ++i) {
    Word d;
    for (int v = 1; v <= total; ++v)
      if (uniform(rng, 0, 2) == 0) d.push_back(v);
    std::shuffle(d.begin(), d.end(), rng);
    inst.extras.push_back(std::move(d));
  }
  return inst;
}

using TrialFn = bool(std::mt19937_64&, std::string&);

// --- word inequalities ---

bool trial_lis1(std::mt19937_64& rng, std::string& ce, int max_letters) {
  WordInstance w = make_words(rng, max_letters);
  std::vector<Word> lhs{concat(concat(w.a, w.b), w.c), w.b};
  std::vector<Word> rhs{concat(w.a, w.b), concat(w.b, w.c)};
  for (const Word& d : w.extras) {
    lhs.push_back(d);
    rhs.push_back(d);
  }
  const int l = ell_multi(lhs).value, r = ell_multi(rhs).value;
  if (l <= r) return true;
  ce = "ell(" + words_str(lhs) + ") = " + std::to_string(l) + " > ell(" +
       words_str(rhs) + ") = " + std::to_string(r);
  return false;
}

bool trial_start_split(std::mt19937_64& rng, std::string& ce, int max_letters) {
  WordInstance w = make_words(rng, max_letters);
  std::sort(w.a.begin(), w.a.end());
  std::vector<Word> lhs{concat(concat(w.a, w.b), w.c), concat(w.a, w.b)};
  std::vector<Word> rhs{concat(w.a, w.b), concat(w.b, w.c)};
  for (const Word& d : w.extras) {
    lhs.push_back(d);
    rhs.push_back(d);
  }
  const int l = ell_multi(lhs).value, r = ell_multi(rhs).value;
  if (l <= r) return true;
  ce = "ell(" + words_str(lhs) + ") = " + std::to_string(l) + " > ell(" +
       words_str(rhs) + ") = " + std::to_string(r);
  return false;
}

bool trial_end_split(std::mt19937_64& rng, std::string& ce, int max_letters) {
  WordInstance w = make_words(rng, max_letters);
  std::sort(w.c.begin(), w.c.end());
  std::vector<Word> lhs{concat(concat(w.a, w.b), w.c), concat(w.b, w.c)};
  std::vector<Word> rhs{concat(w.a, w.b), concat(w.b, w.c)};
  for (const Word& d : w.extras) {
    lhs.push_back(d);
    rhs.push_back(d);
  }
  const int l = ell_multi(lhs).value, r = ell_multi(rhs).value;
  if (l <= r) return true;
  ce = "ell(" + words_str(lhs) + ") = " + std::to_string(l) + " > ell(" +
       words_str(rhs) + ") = " + std::to_string(r);
  return false;
}

// --- path machinery ---

struct MatrixFamily {
  SkewTableau t;
  PathMatrix m;
  PathFamily f;
};

MatrixFamily random_matrix_family(std::mt19937_64& rng, int max_n) {
  MatrixFamily mf;
  mf.t = random_tableau(rng, max_n, 3, 2);
  mf.m = build_matrix(mf.t, uniform(rng, 1, 3));
  const int k = uniform(rng, 1, 3);
  for (int i = 0; i < k; ++i)
    mf.f.paths.push_back(random_path(rng, mf.m.cols, mf.m.rows));
  return mf;
}

bool check_monotone(const PathMatrix& m, const PathFamily& before,
                    const PathFamily& after, std::string& ce,
                    const char* what) {
  const int lb = family_ell(m, before).value;
  const int la = family_ell(m, after).value;
  if (la >= lb) return true;
  ce = std::string(what) + " dropped ell from " + std::to_string(lb) + " to " +
       std::to_string(la) + " on " + family_str(before);
  return false;
}

bool trial_column_split(std::mt19937_64& rng, std::string& ce, int max_n) {
  MatrixFamily mf = random_matrix_family(rng, max_n);
  if (column_split_check(mf.m, mf.f)) return true;
  ce = "column split mismatch on " + family_str(mf.f);
  return false;
}

bool trial_tds(std::mt19937_64& rng, std::string& ce, int max_n) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    MatrixFamily mf = random_matrix_family(rng, max_n);
    struct Site {
      int p, q, col;
    };
    std::vector<Site> sites;
    for (int p = 0; p < mf.f.size(); ++p)
      for (int q2 = 0; q2 < mf.f.size(); ++q2) {
        if (p == q2) continue;
        for (int col = 1; col <= mf.m.cols; ++col) {
          auto sp = mf.f.paths[p].span(col), sq = mf.f.paths[q2].span(col);
          if (sp && sq && sp->first <= sq->first && sp->second >= sq->second)
            sites.push_back({p, q2, col});
        }
      }
    if (sites.empty()) continue;
    const Site s = sites[uniform(rng, 0, static_cast<int>(sites.size()) - 1)];
    PathFamily after = top_down_switch(mf.f, s.p, s.q, s.col);
    return check_monotone(mf.m, mf.f, after, ce, "top-down switch");
  }
  return true;  // no legal site found; vacuous trial
}

bool trial_left_shift(std::mt19937_64& rng, std::string& ce, int max_n) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    MatrixFamily mf = random_matrix_family(rng, max_n);
    struct Site {
      int p, col, split;
    };
    std::vector<Site> sites;
    for (int p = 0; p < mf.f.size(); ++p) {
      const LatticePath& path = mf.f.paths[p];
      for (int col = 2; col <= mf.m.cols; ++col) {
        auto run = path.span(col);
        auto landing = path.span(col - 1);
        if (!run || run->second == run->first) continue;
        if (!landing || landing->first != run->first ||
            landing->second != run->first)
          continue;
        for (int split = run->first + 1; split <= run->second; ++split) {
          bool blocked = false;
          for (int o = 0; o < mf.f.size() && !blocked; ++o) {
            if (o == p) continue;
            const LatticePath& other = mf.f.paths[o];
            blocked = other.contains({col - 1, run->first}) ||
                      other.contains({col, split});
            auto sp = other.span(col - 1);
            blocked = blocked || (sp && sp->first <= split &&
                                  sp->second >= run->first + 1);
          }
          if (!blocked) sites.push_back({p, col, split});
        }
      }
    }
    if (sites.empty()) continue;
    const Site s = sites[uniform(rng, 0, static_cast<int>(sites.size()) - 1)];
    PathFamily after = left_shift(mf.f, s.p, s.col, s.split);
    return check_monotone(mf.m, mf.f, after, ce, "left shift");
  }
  return true;
}

// Random monotone walk from (c0,r0) to (c1,r1) inclusive.
std::vector<Point> random_walk(std::mt19937_64& rng, Point from, Point to) {
  std::vector<Point> cells{from};
  int col = from.col, row = from.row;
  while (col < to.col || row < to.row) {
    const bool right =
        col < to.col && (row == to.row || uniform(rng, 0, 1) == 0);
    if (right)
      cells.push_back({++col, row});
    else
      cells.push_back({col, ++row});
  }
  return cells;
}

bool trial_rect_flip(std::mt19937_64& rng, std::string& ce, int max_n) {
  SkewTableau t;
  do {
    t = random_tableau(rng, max_n, 3, 2);
  } while (t.rows() < 2);
  const int q = uniform(rng, 2, 4);
  PathMatrix m = build_matrix(t, q);
  const int r = m.rows;
  const int row = uniform(rng, 1, r - 1);
  const int a = uniform(rng, 1, q);
  const int b = uniform(rng, a, q);

  std::vector<Point> prefix = random_walk(
      rng, {uniform(rng, 1, a), uniform(rng, 1, row)}, {a, row});
  LatticePath P{prefix};
  for (int c = a + 1; c <= b; ++c) P.cells.push_back({c, row});
  P.cells.push_back({b, row + 1});
  {
    int col = b, rr = row + 1;
    while ((col < q || rr < r) && uniform(rng, 0, 2) != 0) {
      if (col < q && (rr == r || uniform(rng, 0, 1) == 0))
        P.cells.push_back({++col, rr});
      else
        P.cells.push_back({col, ++rr});
    }
  }
  LatticePath Q{prefix};
  for (int c = a + 1; c <= b; ++c) Q.cells.push_back({c, row});
  if (b < q && uniform(rng, 0, 1) == 0) {
    // step right first, then wander; q may cross P again further on, the
    // flip only needs the relation at the segment's end column
    int col = b + 1, rr = row;
    Q.cells.push_back({col, rr});
    while ((col < q || rr < r) && uniform(rng, 0, 2) != 0) {
      if (col < q && (rr == r || uniform(rng, 0, 1) == 0))
        Q.cells.push_back({++col, rr});
      else
        Q.cells.push_back({col, ++rr});
    }
  }

  PathFamily f;
  const int extras = uniform(rng, 0, 2);
  for (int i = 0; i < extras; ++i)
    f.paths.push_back(random_path(rng, q, r));
  const int pi = f.size();
  f.paths.push_back(P);
  f.paths.push_back(Q);
  PathFamily after = rectangular_flip(f, pi, pi + 1, row, a, b);
  return check_monotone(m, f, after, ce, "rectangular flip");
}

bool trial_rev_rect_flip(std::mt19937_64& rng, std::string& ce, int max_n) {
  SkewTableau t;
  do {
    t = random_tableau(rng, max_n, 3, 2);
  } while (t.rows() < 2);
  const int q = uniform(rng, 2, 4);
  PathMatrix m = build_matrix(t, q);
  const int r = m.rows;
  const int row = uniform(rng, 2, r);
  const int a = uniform(rng, 1, q);
  const int b = uniform(rng, a, q);

  std::vector<Point> approach = random_walk(
      rng, {uniform(rng, 1, a), uniform(rng, 1, row - 1)}, {a, row - 1});
  LatticePath P{approach};
  for (int c = a; c <= b; ++c) P.cells.push_back({c, row});
  if (b < q && uniform(rng, 0, 1) == 0) {
    const int p_tail = uniform(rng, b + 1, q);
    for (int c = b + 1; c <= p_tail; ++c) P.cells.push_back({c, row});
  }
  LatticePath Q;
  const int q_start = uniform(rng, 1, a);
  for (int c = q_start; c < a; ++c) Q.cells.push_back({c, row});
  for (int c = a; c <= b; ++c) Q.cells.push_back({c, row});
  if (b < q && uniform(rng, 0, 1) == 0) {
    int col = b + 1, rr = row;
    Q.cells.push_back({col, rr});
    while ((col < q || rr < r) && uniform(rng, 0, 2) != 0) {
      if (col < q && (rr == r || uniform(rng, 0, 1) == 0))
        Q.cells.push_back({++col, rr});
      else
        Q.cells.push_back({col, ++rr});
    }
  }

  PathFamily f;
  const int extras = uniform(rng, 0, 2);
  for (int i = 0; i < extras; ++i) f.paths.push_back(random_path(rng, q, r));
  const int pi = f.size();
  f.paths.push_back(P);
  f.paths.push_back(Q);
  PathFamily after = reverse_rectangular_flip(f, pi, pi + 1, row, a, b);
  return check_monotone(m, f, after, ce, "reverse rectangular flip");
}

bool trial_normalize(std::mt19937_64& rng, std::string& ce, int max_n) {
  const int r = uniform(rng, 1, 4);
  SkewTableau t;
  do {
    t = random_tableau(rng, std::max(max_n, r), 4, 2);
  } while (t.rows() != r);
  const int q = uniform(rng, r, 5);
  PathMatrix m = build_matrix(t, q);
  const int k = uniform(rng, 1, std::min(r, 3));
  PathFamily f;
  for (int i = 0; i < k; ++i) f.paths.push_back(random_path(rng, q, r));

  const int before = family_ell(m, f).value;
  PathFamily norm;
  try {
    norm = normalize_family(m, f);
  } catch (const std::logic_error& e) {
    ce = std::string("normalization failed: ") + e.what() + " on " +
         family_str(f);
    return false;
  }
  const int after = family_ell(m, norm).value;
  if (after < before) {
    ce = "normalization dropped ell from " + std::to_string(before) + " to " +
         std::to_string(after) + " on " + family_str(f);
    return false;
  }
  // structural postconditions, re-checked from outside
  const auto bounds = bounding_paths(q, r, k);
  if (!family_is_ordered(norm)) {
    ce = "normalized family crosses: " + family_str(norm);
    return false;
  }
  for (int i = 0; i < k; ++i) {
    const LatticePath& p = norm.paths[i];
    if (!(p.front() == Point{1, k - i}) || !weakly_above(p, bounds[i])) {
      ce = "normalized path " + std::to_string(i) + " misplaced: " +
           family_str(norm);
      return false;
    }
    for (int c = std::max(1, r - k + i); c <= q; ++c)
      if (!p.contains({c, r - i})) {
        ce = "normalized path " + std::to_string(i) +
             " misses its terminal segment: " + family_str(norm);
        return false;
      }
  }
  return true;
}

}  // namespace

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names{
      "lis1",      "start-split",   "end-split",
      "tds",       "left-shift",    "rect-flip",
      "rev-rect-flip", "column-split", "normalize"};
  return names;
}

LemmaRunResult run_lemma_check(const std::string& lemma, int trials,
                               uint64_t seed, int max_letters) {
  if (max_letters < 3 || max_letters > kDefaultOracleCap)
    throw std::invalid_argument("max letters must lie in [3, 24]");
  const int max_n = std::max(2, std::min(6, max_letters / 2));
  std::mt19937_64 rng(seed);
  LemmaRunResult res;
  res.lemma = lemma;
  res.trials = trials;

  auto dispatch = [&](std::mt19937_64& r, std::string& ce) -> bool {
    if (lemma == "lis1") return trial_lis1(r, ce, max_letters);
    if (lemma == "start-split") return trial_start_split(r, ce, max_letters);
    if (lemma == "end-split") return trial_end_split(r, ce, max_letters);
    if (lemma == "tds") return trial_tds(r, ce, max_n);
    if (lemma == "left-shift") return trial_left_shift(r, ce, max_n);
    if (lemma == "rect-flip") return trial_rect_flip(r, ce, max_n);
    if (lemma == "rev-rect-flip") return trial_rev_rect_flip(r, ce, max_n);
    if (lemma == "column-split") return trial_column_split(r, ce, max_n);
    if (lemma == "normalize") return trial_normalize(r, ce, max_n);
    throw std::invalid_argument("unknown lemma: " + lemma);
  };

  for (int i = 0; i < trials; ++i) {
    std::string ce;
    if (!dispatch(rng, ce)) {
      res.failures += 1;
      if (res.first_counterexample.empty()) res.first_counterexample = ce;
    }
  }
  return res;
}

}  // namespace tabstab
