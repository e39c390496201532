#include "tabstab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "tabstab/stab.hpp"

namespace tabstab {

namespace {

void shapes_rec(const EnumBounds& b, std::vector<int>& lambda,
                std::vector<SkewShape>& out) {
  const int r = static_cast<int>(lambda.size());
  if (r > 0) {
    // all inner offset lists for this lambda: weakly decreasing, bottom
    // offset 0 (translation canonical form), top offset <= max_inner, and
    // outer = inner + lambda weakly decreasing
    std::vector<int> inner(r, 0);
    auto emit = [&](auto&& self, int i) -> void {
      if (i < 0) {
        SkewShape s;
        s.inner = inner;
        s.outer.resize(r);
        for (int j = 0; j < r; ++j) s.outer[j] = inner[j] + lambda[j];
        for (int j = 1; j < r; ++j)
          if (s.outer[j] > s.outer[j - 1]) return;
        out.push_back(std::move(s));
        return;
      }
      const int hi = i == r - 1 ? 0 : std::min(b.max_inner, 99);
      const int lo = i == r - 1 ? 0 : inner[i + 1];
      for (int v = lo; v <= hi; ++v) {
        inner[i] = v;
        self(self, i - 1);
      }
    };
    emit(emit, r - 1);
  }
  if (r >= b.max_rows) return;
  int total = 0;
  for (int v : lambda) total += v;
  const int max_part = r == 0 ? b.max_n : lambda.back();
  for (int part = 1; part <= max_part && total + part <= b.max_n; ++part) {
    lambda.push_back(part);
    shapes_rec(b, lambda, out);
    lambda.pop_back();
  }
}

}  // namespace

std::vector<SkewShape> enumerate_shapes(const EnumBounds& bounds) {
  std::vector<SkewShape> out;
  std::vector<int> lambda;
  shapes_rec(bounds, lambda, out);
  return out;
}

void for_each_standard_filling(
    const SkewShape& shape, const std::function<void(const SkewTableau&)>& fn) {
  const int r = shape.rows();
  int n = 0;
  for (int i = 0; i < r; ++i) n += shape.row_size(i);
  std::vector<std::vector<int>> rows(r);
  std::vector<int> filled(r, 0);

  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      fn(SkewTableau::make(shape.inner, rows));
      return;
    }
    for (int i = 0; i < r; ++i) {
      if (filled[i] == shape.row_size(i)) continue;
      const int col = shape.inner[i] + filled[i] + 1;  // 1-based
      // the cell above (if part of row i-1) must already be filled
      if (i > 0 && col > shape.inner[i - 1] &&
          col > shape.inner[i - 1] + filled[i - 1])
        continue;
      rows[i].push_back(next);
      filled[i] += 1;
      self(self, next + 1);
      rows[i].pop_back();
      filled[i] -= 1;
    }
  };
  rec(rec, 1);
}

uint64_t tableau_hash(const SkewTableau& t) {
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (int i = 0; i < t.rows(); ++i) {
    mix(0xABCDull);
    mix(static_cast<uint64_t>(t.shape.inner[i]));
    for (int v : t.entries[i]) mix(static_cast<uint64_t>(v));
  }
  return h;
}

TheoremSummary verify_main_theorem(
    const EnumBounds& bounds, int jobs, bool check_increment,
    const std::function<void(const TableauRecord&)>& record_sink) {
  const std::vector<SkewShape> shapes = enumerate_shapes(bounds);
  if (jobs < 1) jobs = 1;

  struct ShapeResult {
    TheoremSummary partial;
    std::vector<TableauRecord> records;
  };
  std::vector<ShapeResult> results(shapes.size());
  std::atomic<size_t> next_shape{0};

  auto work = [&]() {
    while (true) {
      const size_t si = next_shape.fetch_add(1);
      if (si >= shapes.size()) break;
      ShapeResult& res = results[si];
      auto& summary = res.partial;
      summary.max_stab_by_rows.assign(bounds.max_rows + 1, 0);
      for_each_standard_filling(shapes[si], [&](const SkewTableau& t) {
        const int r = t.rows();
        summary.tableau_count += 1;
        StabReport rep = stab_report(t, r + 2);
        if (rep.stab == 0 || rep.stab > r) summary.bound_violations += 1;
        for (int k = 1; k < r + 2; ++k)
          if (rep.verdicts[k - 1] && !rep.verdicts[k])
            summary.monotonicity_violations += 1;
        if (rep.stab > 0)
          summary.max_stab_by_rows[r] =
              std::max(summary.max_stab_by_rows[r], rep.stab);
        if (check_increment && !shape_increment_check(t).ok)
          summary.increment_violations += 1;
        if (record_sink)
          res.records.push_back({t, rep.stab, rep.verdicts});
      });
    }
  };

  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  TheoremSummary total;
  total.max_stab_by_rows.assign(bounds.max_rows + 1, 0);
  for (const auto& res : results) {
    total.tableau_count += res.partial.tableau_count;
    total.bound_violations += res.partial.bound_violations;
    total.monotonicity_violations += res.partial.monotonicity_violations;
    total.increment_violations += res.partial.increment_violations;
    for (size_t r = 0; r < res.partial.max_stab_by_rows.size(); ++r)
      total.max_stab_by_rows[r] =
          std::max(total.max_stab_by_rows[r], res.partial.max_stab_by_rows[r]);
    if (record_sink)
      for (const auto& rec : res.records) record_sink(rec);
  }
  return total;
}

}  // namespace tabstab
