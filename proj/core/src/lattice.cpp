#include "tabstab/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tabstab {

bool LatticePath::valid() const {
  if (cells.empty()) return false;
  for (size_t i = 1; i < cells.size(); ++i) {
    const int dc = cells[i].col - cells[i - 1].col;
    const int dr = cells[i].row - cells[i - 1].row;
    if (!((dc == 1 && dr == 0) || (dc == 0 && dr == 1))) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> LatticePath::span(int col) const {
  int lo = 0, hi = 0;
  for (const Point& p : cells) {
    if (p.col != col) continue;
    if (lo == 0) lo = hi = p.row;
    else {
      lo = std::min(lo, p.row);
      hi = std::max(hi, p.row);
    }
  }
  if (lo == 0) return std::nullopt;
  return std::make_pair(lo, hi);
}

bool LatticePath::contains(Point p) const {
  return std::find(cells.begin(), cells.end(), p) != cells.end();
}

Word PathMatrix::cell(int col, int row) const {
  Word w = row_words[row - 1];
  const int shift = (col - 1) * n;
  for (int& v : w) v += shift;
  return w;
}

PathMatrix build_matrix(const SkewTableau& t, int q) {
  if (q < 1) throw std::invalid_argument("build_matrix requires q >= 1");
  if (!has_weakly_decreasing_rows(t))
    throw std::invalid_argument(
        "build_matrix requires weakly decreasing row sizes");
  if (auto d = validate_standard(t); !d)
    throw std::invalid_argument("build_matrix requires a standard tableau: " +
                                d.message);
  PathMatrix m;
  m.cols = q;
  m.rows = t.rows();
  m.n = t.size();
  m.row_words.resize(m.rows);
  for (int j = 1; j <= m.rows; ++j)
    m.row_words[j - 1] = t.entries[m.rows - j];
  return m;
}

Word path_word(const PathMatrix& m, const LatticePath& p) {
  if (!p.valid()) throw std::invalid_argument("not a lattice path");
  Word w;
  for (const Point& c : p.cells) {
    if (!m.in_bounds(c)) throw std::out_of_range("path leaves the matrix");
    Word cw = m.cell(c.col, c.row);
    w.insert(w.end(), cw.begin(), cw.end());
  }
  return w;
}

namespace {

// The portion of the path's word in one column: its cells there, bottom to
// top (path order), concatenated.
Word column_restriction(const PathMatrix& m, const LatticePath& p, int col) {
  Word w;
  auto sp = p.span(col);
  if (!sp) return w;
  for (int row = sp->first; row <= sp->second; ++row) {
    Word cw = m.cell(col, row);
    w.insert(w.end(), cw.begin(), cw.end());
  }
  return w;
}

}  // namespace

FamilyEll family_ell(const PathMatrix& m, const PathFamily& f, int cap) {
  for (const auto& p : f.paths) {
    if (!p.valid()) throw std::invalid_argument("not a lattice path");
    for (const Point& c : p.cells)
      if (!m.in_bounds(c)) throw std::out_of_range("path leaves the matrix");
  }
  FamilyEll out;
  out.per_column.resize(m.cols);
  for (int col = 1; col <= m.cols; ++col) {
    std::vector<Word> words(f.paths.size());
    for (size_t i = 0; i < f.paths.size(); ++i)
      words[i] = column_restriction(m, f.paths[i], col);
    EllResult r = ell_multi(words, cap);
    out.value += r.value;
    out.per_column[col - 1] = std::move(r.witness);
  }
  return out;
}

bool column_split_check(const PathMatrix& m, const PathFamily& f, int cap) {
  const int per_column = family_ell(m, f, cap).value;
  std::vector<Word> whole(f.paths.size());
  for (size_t i = 0; i < f.paths.size(); ++i)
    whole[i] = path_word(m, f.paths[i]);
  return per_column == ell_multi(whole, cap).value;
}

namespace {

std::vector<Point> cells_before_col(const LatticePath& p, int col) {
  std::vector<Point> out;
  for (const Point& c : p.cells)
    if (c.col < col) out.push_back(c);
  return out;
}

std::vector<Point> cells_after_col(const LatticePath& p, int col) {
  std::vector<Point> out;
  for (const Point& c : p.cells)
    if (c.col > col) out.push_back(c);
  return out;
}

LatticePath checked(std::vector<Point> cells, const char* what) {
  LatticePath p{std::move(cells)};
  if (!p.valid())
    throw std::logic_error(std::string(what) + " produced a broken path");
  return p;
}

}  // namespace

PathFamily top_down_switch(const PathFamily& f, int p_index, int q_index,
                           int col) {
  const int k = f.size();
  if (p_index < 0 || p_index >= k || q_index < 0 || q_index >= k ||
      p_index == q_index)
    throw std::invalid_argument("bad path indices");
  const LatticePath& P = f.paths[p_index];
  const LatticePath& Q = f.paths[q_index];
  auto sp = P.span(col), sq = Q.span(col);
  if (!sp || !sq)
    throw std::invalid_argument("no crossing: paths do not share the column");
  if (!(sp->first <= sq->first && sp->second >= sq->second))
    throw std::invalid_argument(
        "no crossing: path must begin weakly lower and end weakly higher");

  std::vector<Point> pc = cells_before_col(P, col);
  for (int row = sp->first; row <= sq->second; ++row) pc.push_back({col, row});
  for (const Point& c : cells_after_col(Q, col)) pc.push_back(c);

  std::vector<Point> qc = cells_before_col(Q, col);
  for (int row = sq->first; row <= sp->second; ++row) qc.push_back({col, row});
  for (const Point& c : cells_after_col(P, col)) qc.push_back(c);

  PathFamily out = f;
  out.paths[p_index] = checked(std::move(pc), "top_down_switch");
  out.paths[q_index] = checked(std::move(qc), "top_down_switch");
  return out;
}

PathFamily left_shift(const PathFamily& f, int p_index, int col,
                      int split_row) {
  if (p_index < 0 || p_index >= f.size())
    throw std::invalid_argument("bad path index");
  const LatticePath& P = f.paths[p_index];
  auto run = P.span(col);
  if (!run || run->second == run->first)
    throw std::invalid_argument("no vertical run in the column");
  const int h = run->first, t = run->second;
  if (split_row <= h || split_row > t)
    throw std::invalid_argument("split row outside the vertical run");
  auto landing = P.span(col - 1);
  if (!landing || landing->first != h || landing->second != h)
    throw std::invalid_argument(
        "run must follow a horizontal segment: the previous column must "
        "hold exactly the entry cell");
  for (int i = 0; i < f.size(); ++i) {
    if (i == p_index) continue;
    const LatticePath& other = f.paths[i];
    // the entry cell and the kept run cell must belong to this path alone
    if (other.contains({col - 1, h}) || other.contains({col, split_row}))
      throw std::invalid_argument(
          "shift site is shared with another path");
    auto sp = other.span(col - 1);
    if (sp && sp->first <= split_row && sp->second >= h + 1)
      throw std::invalid_argument("left shift would create an intersection");
  }

  std::vector<Point> cells;
  for (const Point& c : P.cells) {
    cells.push_back(c);
    if (c.col == col - 1 && c.row == h) break;
  }
  for (int row = h + 1; row <= split_row; ++row) cells.push_back({col - 1, row});
  for (int row = split_row; row <= t; ++row) cells.push_back({col, row});
  bool copy = false;
  for (const Point& c : P.cells) {
    if (copy) cells.push_back(c);
    if (c.col == col && c.row == t) copy = true;
  }
  PathFamily out = f;
  out.paths[p_index] = checked(std::move(cells), "left_shift");
  return out;
}

namespace {

void require_shared_segment(const LatticePath& P, const LatticePath& Q,
                            int row, int col_a, int col_b) {
  if (col_a > col_b) throw std::invalid_argument("bad segment");
  for (int c = col_a; c <= col_b; ++c) {
    if (!P.contains({c, row}) || !Q.contains({c, row}))
      throw std::invalid_argument("segment is not shared by both paths");
  }
}

}  // namespace

PathFamily rectangular_flip(const PathFamily& f, int p_index, int q_index,
                            int row, int col_a, int col_b) {
  const int k = f.size();
  if (p_index < 0 || p_index >= k || q_index < 0 || q_index >= k ||
      p_index == q_index)
    throw std::invalid_argument("bad path indices");
  const LatticePath& P = f.paths[p_index];
  const LatticePath& Q = f.paths[q_index];
  require_shared_segment(P, Q, row, col_a, col_b);
  if (!P.contains({col_b, row + 1}))
    throw std::invalid_argument("path must continue up after the segment");
  // above-ness matters where the reroute lands: at the segment's end column
  if (P.span(col_b)->second < Q.span(col_b)->second)
    throw std::invalid_argument(
        "path must leave the segment column weakly above the other");
  if (col_a == col_b) return f;

  std::vector<Point> cells;
  for (const Point& c : P.cells) {
    cells.push_back(c);
    if (c == Point{col_a, row}) break;
  }
  for (int c = col_a; c <= col_b; ++c) cells.push_back({c, row + 1});
  bool copy = false;
  for (const Point& c : P.cells) {
    if (copy) cells.push_back(c);
    if (c == Point{col_b, row + 1}) copy = true;
  }
  PathFamily out = f;
  out.paths[p_index] = checked(std::move(cells), "rectangular_flip");
  return out;
}

PathFamily reverse_rectangular_flip(const PathFamily& f, int p_index,
                                    int q_index, int row, int col_a,
                                    int col_b) {
  const int k = f.size();
  if (p_index < 0 || p_index >= k || q_index < 0 || q_index >= k ||
      p_index == q_index)
    throw std::invalid_argument("bad path indices");
  const LatticePath& P = f.paths[p_index];
  const LatticePath& Q = f.paths[q_index];
  require_shared_segment(P, Q, row, col_a, col_b);
  // P must come in from below at (col_a, row-1).
  auto it = std::find(P.cells.begin(), P.cells.end(), Point{col_a, row});
  if (it == P.cells.begin() || !(*(it - 1) == Point{col_a, row - 1}))
    throw std::invalid_argument("path must enter the segment from below");
  // below-ness matters where the reroute departs: at the segment's start
  if (P.span(col_a)->first > Q.span(col_a)->first)
    throw std::invalid_argument(
        "path must enter the segment column weakly below the other");
  if (col_a == col_b) return f;

  std::vector<Point> cells;
  for (const Point& c : P.cells) {
    cells.push_back(c);
    if (c == Point{col_a, row - 1}) break;
  }
  for (int c = col_a + 1; c <= col_b; ++c) cells.push_back({c, row - 1});
  cells.push_back({col_b, row});
  bool copy = false;
  for (const Point& c : P.cells) {
    if (copy) cells.push_back(c);
    if (c == Point{col_b, row}) copy = true;
  }
  PathFamily out = f;
  out.paths[p_index] = checked(std::move(cells), "reverse_rectangular_flip");
  return out;
}

std::vector<LatticePath> bounding_paths(int q, int r, int k) {
  if (!(q >= r && r >= k && k >= 1))
    throw std::domain_error("bounding paths require q >= r >= k >= 1");
  std::vector<LatticePath> out;
  out.reserve(k);
  for (int i = 1; i <= k; ++i) {
    LatticePath L;
    int col = 1, row = k - i + 1;
    L.cells.push_back({col, row});
    while (col < i) L.cells.push_back({++col, row});
    if (r > k) {
      // alternate up/right, starting up, until (r-k+i-1, r-i+1)
      while (row < r - i + 1) {
        L.cells.push_back({col, ++row});
        if (row < r - i + 1) L.cells.push_back({++col, row});
      }
    }
    while (col < q) L.cells.push_back({++col, row});
    out.push_back(std::move(L));
  }
  return out;
}

bool weakly_above(const LatticePath& a, const LatticePath& b) {
  const int lo = std::min(a.front().col, b.front().col);
  const int hi = std::max(a.back().col, b.back().col);
  for (int c = lo; c <= hi; ++c) {
    auto sa = a.span(c), sb = b.span(c);
    if (!sa || !sb) continue;
    if (sa->first < sb->first || sa->second < sb->second) return false;
  }
  return true;
}

namespace {

// -1, 0, +1 componentwise comparison of two spans; 2 when incomparable.
int span_cmp(std::pair<int, int> sa, std::pair<int, int> sb) {
  const bool ge = sa.first >= sb.first && sa.second >= sb.second;
  const bool le = sa.first <= sb.first && sa.second <= sb.second;
  if (ge && le) return 0;
  if (ge) return 1;
  if (le) return -1;
  return 2;  // incomparable: crossing within the column
}

}  // namespace

bool family_is_ordered(const PathFamily& f) {
  for (int i = 0; i < f.size(); ++i) {
    for (int j = i + 1; j < f.size(); ++j) {
      const LatticePath& a = f.paths[i];
      const LatticePath& b = f.paths[j];
      int sign = 0;
      const int lo = std::min(a.front().col, b.front().col);
      const int hi = std::max(a.back().col, b.back().col);
      for (int c = lo; c <= hi; ++c) {
        auto sa = a.span(c), sb = b.span(c);
        if (!sa || !sb) continue;
        const int s = span_cmp(*sa, *sb);
        if (s == 2) return false;
        if (s == 0) continue;
        if (sign != 0 && s != sign) return false;
        sign = s;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// normalize_family
//
// Full-column-span staircases are handled through their max-row profiles:
// m[0] is the start row and m[c] the top row in column c, so column c holds
// rows [m[c-1], m[c]]. Every edit below is one of the monotone moves (an
// extension, a top-down switch, a left-shift, a flip), so the family
// invariant never decreases.
// ---------------------------------------------------------------------------

namespace {

struct Prof {
  std::vector<int> m;  // index 0..q; m[0] = start row

  int q() const { return static_cast<int>(m.size()) - 1; }
};

Prof extend_to_full(const LatticePath& p, int q) {
  // Backward to (1,1) (up column 1, then along the start row) and forward
  // along the end row to column q. Supersets of the original cells, so the
  // family invariant cannot drop.
  Prof prof;
  prof.m.assign(q + 1, 0);
  prof.m[0] = 1;
  int last = p.front().row;
  for (int c = 1; c <= q; ++c) {
    if (auto sp = p.span(c)) last = sp->second;
    prof.m[c] = last;
  }
  return prof;
}

LatticePath from_prof(const Prof& p) {
  LatticePath out;
  const int q = p.q();
  out.cells.push_back({1, p.m[0]});
  for (int c = 1; c <= q; ++c) {
    if (c > 1) out.cells.push_back({c, p.m[c - 1]});
    for (int row = p.m[c - 1] + 1; row <= p.m[c]; ++row)
      out.cells.push_back({c, row});
  }
  return out;
}

int sgn(int v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// Repeated top-down switches until the pair is pointwise comparable. A
// switch at column c swaps the profile suffixes from c on; each one removes
// the first sign change of the difference.
bool uncross_pair(Prof& a, Prof& b) {
  bool changed = false;
  const int q = a.q();
  while (true) {
    int last = 0, flip = 0;
    for (int c = 0; c <= q; ++c) {
      const int s = sgn(a.m[c] - b.m[c]);
      if (s == 0) continue;
      if (last != 0 && s != last) {
        flip = c;
        break;
      }
      last = s;
    }
    if (flip == 0) return changed;
    for (int c = flip; c <= q; ++c) std::swap(a.m[c], b.m[c]);
    changed = true;
  }
}

void uncross_and_sort(std::vector<Prof>& profs) {
  const int k = static_cast<int>(profs.size());
  const int guard = 10 * k * k + 50;
  for (int round = 0; round < guard; ++round) {
    bool changed = false;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        changed |= uncross_pair(profs[i], profs[j]);
    if (!changed) break;
    if (round == guard - 1)
      throw std::logic_error("uncrossing did not converge");
  }
  std::sort(profs.begin(), profs.end(),
            [](const Prof& a, const Prof& b) { return a.m > b.m; });
}

std::vector<int> max_profile_of(const LatticePath& p, int q) {
  std::vector<int> m(q + 1, 0);
  for (int c = 1; c <= q; ++c) {
    auto sp = p.span(c);
    m[c] = sp ? sp->second : (c > 0 ? m[c - 1] : 0);
  }
  m[0] = p.front().row;
  return m;
}

}  // namespace

PathFamily normalize_family(const PathMatrix& mat, const PathFamily& f) {
  const int q = mat.cols, r = mat.rows;
  const int k = f.size();
  if (k < 1) throw std::invalid_argument("empty family");
  if (!(q >= r && r >= k))
    throw std::domain_error("normalization requires q >= r >= k");
  for (const auto& p : f.paths) {
    if (!p.valid()) throw std::invalid_argument("not a lattice path");
    for (const Point& c : p.cells)
      if (!mat.in_bounds(c)) throw std::out_of_range("path leaves the matrix");
  }

  // Extensions, then repeated switching into a top-down order.
  std::vector<Prof> profs;
  profs.reserve(k);
  for (const auto& p : f.paths) profs.push_back(extend_to_full(p, q));
  uncross_and_sort(profs);

  // Raise each end to its terminal row when it falls short, top path first
  // (one more extension).
  for (int i = 0; i < k; ++i)
    profs[i].m[q] = std::max(profs[i].m[q], r - i);

  // Start separation (the auxiliary-column flips): sweep positions j; at
  // each one the paths above the pinned one are flipped off its start row
  // onto row j+2, out to their first up-turn column.
  for (int j = 0; j + 1 < k; ++j) {
    const int row = j + 1, target = j + 2;
    const Prof& pinned = profs[k - j - 1];
    if (pinned.m[0] != row)
      throw std::logic_error("start separation lost its invariant");
    for (int p = 0; p <= k - j - 2; ++p) {
      Prof& P = profs[p];
      if (P.m[0] != row)
        throw std::logic_error("start separation lost its invariant");
      int e = 1;
      while (e <= q && P.m[e] < target) ++e;
      if (e > q) throw std::logic_error("path never leaves its start row");
      if (pinned.m[e - 1] > row)
        throw std::logic_error("flip segment not shared with pinned path");
      P.m[0] = target;
      for (int c = 1; c <= e; ++c) P.m[c] = std::max(P.m[c], target);
    }
  }

  // Raise each path, top first, until it stays weakly above its bounding
  // path. Two moves cover every dip: when the run's entry cell is shared
  // with a lower path, a rectangular flip lifts the whole shared flat
  // segment one row; otherwise a left-shift pulls the following vertical
  // run one column left.
  const auto bounds = bounding_paths(q, r, k);
  for (int i = 0; i < k; ++i) {
    const std::vector<int> lmax = max_profile_of(bounds[i], q);
    Prof& P = profs[i];
    const int guard = (q + 2) * (r + 2) * 8;
    int rounds = 0;
    while (true) {
      if (++rounds > guard)
        throw std::logic_error("raising against the bound did not converge");
      int c_bad = 0;
      for (int c = 1; c <= q; ++c)
        if (P.m[c] < lmax[c]) {
          c_bad = c;
          break;
        }
      if (c_bad == 0) break;
      int up = c_bad + 1;
      while (up <= q && P.m[up] == P.m[c_bad]) ++up;
      if (up > q) throw std::logic_error("no vertical run to shift");
      const int h = P.m[up - 1];

      int flip_against = -1;
      for (int o = i + 1; o < k && flip_against < 0; ++o)
        if (profs[o].m[up - 1] == h) flip_against = o;
      if (flip_against >= 0) {
        // shared horizontal segment reaching the up-turn: a rectangular
        // flip over the lower path raises the flat run by one row
        const Prof& other = profs[flip_against];
        int a = up - 1;
        while (a >= 2 && P.m[a - 1] == h && other.m[a - 1] == h) --a;
        for (int x = a; x <= up - 1; ++x) {
          if (P.m[x] != h) throw std::logic_error("flip segment not flat");
          P.m[x] = h + 1;
        }
        continue;
      }

      // landing column up-1 must hold exactly the entry cell of this path
      if (P.m[up - 2] != P.m[up - 1])
        throw std::logic_error("left shift landing is not a single cell");
      int mm = std::min(P.m[up], lmax[up - 1]);
      for (int o = 0; o < k; ++o) {
        if (o == i) continue;
        const int lo = profs[o].m[up - 2], hi = profs[o].m[up - 1];
        if (hi >= h + 1 && lo <= mm) mm = std::min(mm, lo - 1);
      }
      if (mm <= h)
        throw std::logic_error("left shift blocked by another path");
      P.m[up - 1] = mm;
    }
  }

  // Reverse flips at the ends: push terminal runs down, one row per sweep,
  // against the path that owns that row.
  if (q >= 2) {
    for (int y = r; y >= r - k + 2; --y) {
      const int owner = r - y;  // 0-based index of the path pinned at row y
      for (int p = owner + 1; p < k; ++p) {
        Prof& P = profs[p];
        if (P.m[q - 1] != y) continue;
        int a = 1;
        while (P.m[a] != y) ++a;
        for (int c = a; c <= q; ++c)
          if (!(profs[owner].m[c - 1] <= y && y <= profs[owner].m[c]))
            throw std::logic_error("terminal segment not shared with owner");
        for (int c = a; c <= q - 1; ++c) P.m[c] = y - 1;
      }
    }
  }

  uncross_and_sort(profs);

  // Postconditions.
  PathFamily out;
  out.paths.reserve(k);
  for (const Prof& p : profs) out.paths.push_back(from_prof(p));
  for (int i = 0; i < k; ++i) {
    const LatticePath& P = out.paths[i];
    if (!(P.front() == Point{1, k - i}))
      throw std::logic_error("normalized path has the wrong start");
    if (!weakly_above(P, bounds[i]))
      throw std::logic_error("normalized path dips below its bound");
    const int row = r - i;  // terminal row of path i (0-based)
    for (int c = std::max(1, r - k + i); c <= q; ++c)
      if (!P.contains({c, row}))
        throw std::logic_error("normalized path misses its terminal segment");
  }
  if (!family_is_ordered(out))
    throw std::logic_error("normalized family still crosses");
  return out;
}

}  // namespace tabstab
