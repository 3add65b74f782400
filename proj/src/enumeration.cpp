#include "lrhive/enumeration.hpp"

#include <numeric>

namespace lrhive {

Model model_from_string(const std::string& s) {
  if (s == "lr") return Model::lr;
  if (s == "hive") return Model::hive;
  if (s == "gz1") return Model::gz1;
  if (s == "gz2") return Model::gz2;
  throw std::invalid_argument("unknown model: " + s);
}

std::string to_string(Model m) {
  switch (m) {
    case Model::lr: return "lr";
    case Model::hive: return "hive";
    case Model::gz1: return "gz1";
    case Model::gz2: return "gz2";
  }
  throw std::invalid_argument("unknown model");
}

namespace {

// Fills rows top (row n fixed to the type) downward. Row sums are forced by
// the prescribed weight, which prunes most of the box; exponent bounds for
// level i+1 are checked as soon as row i is complete.
struct GzEnumerator {
  const GZTriple& spec;
  int n;
  std::vector<std::vector<Int>> rows;  // rows[i-1] has i entries
  std::vector<Int> row_sum;            // forced sum of row i at index i-1
  const std::function<bool(const TArray&)>& emit;
  bool stopped = false;

  GzEnumerator(const GZTriple& s, const std::function<bool(const TArray&)>& e)
      : spec(s), n(s.rank()), emit(e) {
    rows.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      rows[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(i), 0);
    rows[static_cast<std::size_t>(n - 1)] = spec.type_wt.parts();
    row_sum.resize(static_cast<std::size_t>(n));
    Int s_i = spec.type_wt.total();
    for (int i = n; i >= 1; --i) {
      row_sum[static_cast<std::size_t>(i - 1)] = s_i;
      s_i -= spec.weight[static_cast<std::size_t>(i - 1)];
    }
  }

  Int at(int i, int j) const {
    return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }

  Int exponent_at(int i, int j) const {
    Int e = 0;
    for (int h = 1; h < j; ++h)
      e += at(i + 1, h) - 2 * at(i, h) + at(i - 1, h);
    e += at(i + 1, j) - at(i, j);
    return e;
  }

  bool exponents_ok(int i) const {
    const Int cap = spec.bound_wt[i] - spec.bound_wt[i + 1];
    for (int j = 1; j <= i; ++j)
      if (exponent_at(i, j) > cap) return false;
    return true;
  }

  void run() {
    const Int total_weight =
        std::accumulate(spec.weight.begin(), spec.weight.end(), Int{0});
    if (total_weight != spec.type_wt.total()) return;
    if (n == 1) {
      if (!emit(TArray(rows))) stopped = true;
      return;
    }
    fill_row(n - 1);
  }

  void fill_row(int i) {
    if (stopped) return;
    if (i == 0) {
      if (!emit(TArray(rows))) stopped = true;
      return;
    }
    fill_entry(i, 1, row_sum[static_cast<std::size_t>(i - 1)]);
  }

  void fill_entry(int i, int j, Int remaining) {
    if (stopped) return;
    if (j > i) {
      if (remaining != 0) return;
      // Levels whose three rows are now all known.
      if (i + 1 <= n - 1 && !exponents_ok(i + 1)) return;
      if (i == 1 && !exponents_ok(1)) return;
      fill_row(i - 1);
      return;
    }
    Int lo = at(i + 1, j + 1);
    Int hi = at(i + 1, j);
    // Interval sums of the untouched suffix bound the remaining row sum.
    Int lo_suffix = 0, hi_suffix = 0;
    for (int k = j + 1; k <= i; ++k) {
      lo_suffix += at(i + 1, k + 1);
      hi_suffix += at(i + 1, k);
    }
    lo = std::max(lo, remaining - hi_suffix);
    hi = std::min(hi, remaining - lo_suffix);
    for (Int v = lo; v <= hi; ++v) {
      rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
      fill_entry(i, j + 1, remaining - v);
      if (stopped) return;
    }
  }
};

// Fills the content matrix row by row (tableau rows). Row j can only hold
// entries 1..j; the semistandard and Yamanouchi prefix inequalities give
// two-sided caps on each entry as it is placed.
struct LrEnumerator {
  const LRTriple& t;
  int n;
  std::vector<std::vector<Int>> a;  // a[i-1][j-1]
  std::vector<Int> rem;             // content left to place
  std::vector<Int> colcum;          // colcum[i-1] = sum_{k<j} a_{i,k}
  const std::function<bool(const SkewTableau&)>& emit;
  bool stopped = false;

  LrEnumerator(const LRTriple& tr, const std::function<bool(const SkewTableau&)>& e)
      : t(tr), n(tr.rank()),
        a(static_cast<std::size_t>(tr.rank()),
          std::vector<Int>(static_cast<std::size_t>(tr.rank()), 0)),
        rem(tr.nu.parts()), colcum(static_cast<std::size_t>(tr.rank()), 0), emit(e) {}

  void run() {
    if (!t.feasible()) return;
    fill_row(1, std::vector<Int>(static_cast<std::size_t>(n) + 1, 0));
  }

  // prefix_above[l] = sum_{k<=l} a_{k,j-1}.
  void fill_row(int j, std::vector<Int> prefix_above) {
    if (stopped) return;
    if (j > n) {
      for (Int r : rem)
        if (r != 0) return;
      if (!emit(SkewTableau(Shape(t.lambda, t.mu), ContentMatrix(a)))) stopped = true;
      return;
    }
    std::vector<Int> prefix(static_cast<std::size_t>(n) + 1, 0);
    fill_entry(j, 1, t.lambda[j] - t.mu[j], prefix_above, prefix);
  }

  void fill_entry(int j, int i, Int remaining, const std::vector<Int>& prefix_above,
                  std::vector<Int>& prefix) {
    if (stopped) return;
    if (i > j || i > n) {
      if (remaining != 0) return;
      // Residual semistandard checks for prefixes longer than the row.
      if (j > 1 && j < n + 1) {
        // l = j+1 is the tightest; larger l only relax the right hand side.
        if (j + 1 <= n &&
            t.mu[j] + prefix[static_cast<std::size_t>(j)] >
                t.mu[j - 1] + prefix_above[static_cast<std::size_t>(j - 1)])
          return;
      }
      std::vector<Int> saved = colcum;
      for (int k = 1; k <= n; ++k)
        colcum[static_cast<std::size_t>(k - 1)] += a[static_cast<std::size_t>(k - 1)]
                                                    [static_cast<std::size_t>(j - 1)];
      fill_row(j + 1, prefix);
      colcum = std::move(saved);
      return;
    }
    Int hi = std::min(remaining, rem[static_cast<std::size_t>(i - 1)]);
    if (j > 1) {
      // semistandard: mu_j + P_j(i) <= mu_{j-1} + P_{j-1}(i-1)
      hi = std::min(hi, t.mu[j - 1] - t.mu[j] +
                            prefix_above[static_cast<std::size_t>(i - 1)] -
                            prefix[static_cast<std::size_t>(i - 1)]);
    }
    if (i > 1) {
      // Yamanouchi: C_i(j) <= C_{i-1}(j-1)
      hi = std::min(hi, colcum[static_cast<std::size_t>(i - 2)] -
                            colcum[static_cast<std::size_t>(i - 1)]);
    }
    for (Int v = 0; v <= hi; ++v) {
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
      rem[static_cast<std::size_t>(i - 1)] -= v;
      prefix[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i - 1)] + v;
      fill_entry(j, i + 1, remaining - v, prefix_above, prefix);
      rem[static_cast<std::size_t>(i - 1)] += v;
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = 0;
      if (stopped) return;
    }
  }
};

// Backtracker over the interior holes of a boundary frame, in (b, a)
// lexicographic order. The rhombus inequalities against already-placed
// neighbours give a finite interval for every hole; the full predicate is
// re-checked at the leaf.
struct HiveEnumerator {
  BoundaryFrame frame;
  const std::function<bool(const HArray&)>& emit;
  bool stopped = false;

  HiveEnumerator(BoundaryFrame f, const std::function<bool(const HArray&)>& e)
      : frame(std::move(f)), emit(e) {}

  void run() { fill(0); }

  void fill(std::size_t idx) {
    if (stopped) return;
    HArray& h = frame.values;
    if (idx == frame.holes.size()) {
      if (is_hive(h)) {
        if (!emit(h)) stopped = true;
      }
      return;
    }
    const auto [a, b] = frame.holes[idx];
    Int lo = h.at(a - 1, b) + h.at(a, b - 1) - h.at(a - 1, b - 1);
    if (b + 1 == h.rank())
      lo = std::max(lo, h.at(a, b + 1) + h.at(a - 1, b - 1) - h.at(a - 1, b));
    Int hi = h.at(a - 1, b - 1) + h.at(a, b - 1) - h.at(a - 1, b - 2);
    if (a >= 2)
      hi = std::min(hi, h.at(a - 1, b - 1) + h.at(a - 1, b) - h.at(a - 2, b - 1));
    for (Int v = lo; v <= hi; ++v) {
      h.set(a, b, v);
      fill(idx + 1);
      if (stopped) return;
    }
    h.set(a, b, 0);
  }
};

}  // namespace

void enumerate_gz(const GZTriple& spec,
                  const std::function<bool(const TArray&)>& emit) {
  GzEnumerator e(spec, emit);
  e.run();
}

void enumerate_lr(const LRTriple& t,
                  const std::function<bool(const SkewTableau&)>& emit) {
  LrEnumerator e(t, emit);
  e.run();
}

void enumerate_hives(const LRTriple& t,
                     const std::function<bool(const HArray&)>& emit) {
  if (!t.sizes_match()) return;
  const HiveBoundary bd = t.boundary();
  enumerate_gz(gz1_of(t), [&](const TArray& s) {
    return emit(reconstruct_from_t1(bd, dual_tarray(s)));
  });
}

void enumerate_hives_direct(const LRTriple& t,
                            const std::function<bool(const HArray&)>& emit) {
  if (!t.sizes_match()) return;
  HiveEnumerator e(make_boundary_frame(t.boundary()), emit);
  e.run();
}

long long count(Model model, const LRTriple& t) {
  long long c = 0;
  switch (model) {
    case Model::lr:
      enumerate_lr(t, [&](const SkewTableau&) { ++c; return true; });
      break;
    case Model::hive:
      enumerate_hives(t, [&](const HArray&) { ++c; return true; });
      break;
    case Model::gz1:
      enumerate_gz(gz1_of(t), [&](const TArray&) { ++c; return true; });
      break;
    case Model::gz2:
      enumerate_gz(gz2_of(t), [&](const TArray&) { ++c; return true; });
      break;
  }
  return c;
}

}  // namespace lrhive
