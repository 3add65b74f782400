#include "lrhive/tableaux.hpp"

#include <numeric>

#include "lrhive/gt.hpp"

namespace lrhive {

ContentMatrix::ContentMatrix(std::vector<std::vector<Int>> a) : a_(std::move(a)) {
  if (a_.empty()) throw std::invalid_argument("ContentMatrix: rank must be positive");
  for (const auto& row : a_) {
    if (row.size() != a_.size())
      throw std::invalid_argument("ContentMatrix: matrix must be n x n");
    for (Int x : row)
      if (x < 0)
        throw std::invalid_argument("ContentMatrix: entries must be non-negative");
  }
}

ContentMatrix ContentMatrix::zero(int n) {
  return ContentMatrix(std::vector<std::vector<Int>>(
      static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0)));
}

Int ContentMatrix::at(int i, int j) const {
  if (i < 1 || i > rank() || j < 1 || j > rank())
    throw std::out_of_range("ContentMatrix: index out of range");
  return a_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

void ContentMatrix::set(int i, int j, Int v) {
  if (i < 1 || i > rank() || j < 1 || j > rank())
    throw std::out_of_range("ContentMatrix: index out of range");
  if (v < 0) throw std::invalid_argument("ContentMatrix: entries must be non-negative");
  a_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
}

SkewTableau::SkewTableau(Shape shape, ContentMatrix a)
    : shape_(std::move(shape)), a_(std::move(a)) {
  require_same_rank(shape_.rank(), a_.rank(), "SkewTableau");
  const int n = shape_.rank();
  for (int j = 1; j <= n; ++j) {
    Int filled = 0;
    for (int i = 1; i <= n; ++i) filled += a_.at(i, j);
    if (shape_.inner()[j] + filled != shape_.outer()[j])
      throw std::invalid_argument("SkewTableau: row " + std::to_string(j) +
                                  " length inconsistent with shape");
  }
}

bool SkewTableau::non_skew() const {
  return shape_.inner() == DominantWeight::zero(rank());
}

bool semistandard_condition(const DominantWeight& inner,
                            const std::vector<std::vector<Int>>& a) {
  const int n = inner.rank();
  for (int m = 1; m < n; ++m) {
    Int lhs = inner[m + 1];        // inner_{m+1} + sum_{k<=l} a_{k,m+1}
    Int rhs = inner[m];            // inner_m + sum_{k<=l-1} a_{k,m}
    for (int l = 1; l <= n; ++l) {
      lhs += a[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(m)];
      if (lhs > rhs) return false;
      rhs += a[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(m - 1)];
    }
  }
  return true;
}

bool yamanouchi_condition(const std::vector<std::vector<Int>>& a) {
  const int n = static_cast<int>(a.size());
  for (int i = 1; i < n; ++i) {
    Int lhs = 0;  // sum_{k<=j} a_{i+1,k}
    Int rhs = 0;  // sum_{k<=j-1} a_{i,k}
    for (int j = 1; j <= n; ++j) {
      lhs += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      if (lhs > rhs) return false;
      rhs += a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
  }
  return true;
}

bool is_semistandard(const SkewTableau& y) {
  return semistandard_condition(y.shape().inner(), y.matrix().rows());
}

std::vector<int> reverse_reading_word(const SkewTableau& y) {
  std::vector<int> word;
  const int n = y.rank();
  for (int j = n; j >= 1; --j)
    for (int i = 1; i <= n; ++i)
      for (Int c = 0; c < y.matrix().at(i, j); ++c) word.push_back(i);
  return word;
}

bool is_yamanouchi_word(const std::vector<int>& word) {
  int maxv = 0;
  for (int x : word) {
    if (x < 1) throw std::invalid_argument("is_yamanouchi_word: entries must be >= 1");
    maxv = std::max(maxv, x);
  }
  std::vector<long long> count(static_cast<std::size_t>(maxv) + 2, 0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    ++count[static_cast<std::size_t>(*it)];
    if (*it > 1 && count[static_cast<std::size_t>(*it)] >
                       count[static_cast<std::size_t>(*it) - 1])
      return false;
  }
  return true;
}

bool is_yamanouchi_symbolic(const SkewTableau& y) {
  return yamanouchi_condition(y.matrix().rows());
}

bool is_lr_tableau(const SkewTableau& y) {
  return is_semistandard(y) && is_yamanouchi_symbolic(y);
}

std::vector<Int> content_of(const SkewTableau& y) {
  const int n = y.rank();
  std::vector<Int> c(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) c[static_cast<std::size_t>(i - 1)] += y.matrix().at(i, j);
  return c;
}

TArray tableau_to_gt(const SkewTableau& y) {
  if (!y.non_skew())
    throw std::domain_error("tableau_to_gt: input must be non-skew");
  if (!is_semistandard(y))
    throw std::domain_error("tableau_to_gt: input must be semistandard");
  const int n = y.rank();
  TArray t = TArray::zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      Int s = 0;
      for (int k = 1; k <= i; ++k) s += y.matrix().at(k, j);
      t.set(i, j, s);
    }
  return t;
}

SkewTableau gt_to_tableau(const TArray& t) {
  if (!is_gt_pattern(t))
    throw std::domain_error("gt_to_tableau: input must be a GT pattern");
  const int n = t.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      if (t.at(i, j) < 0)
        throw std::domain_error("gt_to_tableau: entries must be non-negative");
  auto entry = [&](int i, int j) -> Int { return (j > i || i < 1) ? 0 : t.at(i, j); };
  ContentMatrix a = ContentMatrix::zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.set(i, j, entry(i, j) - entry(i - 1, j));
  Shape shape(DominantWeight(t.type()), DominantWeight::zero(n));
  return SkewTableau(std::move(shape), std::move(a));
}

TruncatedGT skew_to_truncated_gt(const SkewTableau& y) {
  if (!is_semistandard(y))
    throw std::domain_error("skew_to_truncated_gt: input must be semistandard");
  const int n = y.rank();
  const DominantWeight& mu = y.shape().inner();
  TruncatedGT f;
  f.n = n;
  for (int k = 0; k <= n; ++k) {
    std::vector<Int> row(static_cast<std::size_t>(n + k), 0);
    for (int j = 1; j <= n; ++j) {
      Int s = mu[j];
      for (int i = 1; i <= k; ++i) s += y.matrix().at(i, j);
      row[static_cast<std::size_t>(j - 1)] = s;
    }
    f.rows.push_back(std::move(row));
  }
  return f;
}

SkewTableau truncated_gt_to_skew(const TruncatedGT& f, const DominantWeight& mu) {
  const int n = f.n;
  require_same_rank(n, mu.rank(), "truncated_gt_to_skew");
  if (static_cast<int>(f.rows.size()) != n + 1)
    throw std::domain_error("truncated_gt_to_skew: fragment must have n+1 rows");
  for (int k = 0; k <= n; ++k)
    if (static_cast<int>(f.rows[static_cast<std::size_t>(k)].size()) != n + k)
      throw std::domain_error("truncated_gt_to_skew: row " + std::to_string(k) +
                              " has the wrong length");
  if (f.rows[0] != mu.parts())
    throw std::domain_error("truncated_gt_to_skew: bottom row must equal the inner shape");
  // Interlacing between consecutive fragment rows, and zero tail past column n.
  for (int k = 0; k < n; ++k) {
    const auto& lo = f.rows[static_cast<std::size_t>(k)];
    const auto& hi = f.rows[static_cast<std::size_t>(k + 1)];
    for (std::size_t j = 0; j < lo.size(); ++j) {
      if (hi[j] < lo[j] || lo[j] < hi[j + 1])
        throw std::domain_error("truncated_gt_to_skew: interlacing violation at row " +
                                std::to_string(k) + ", column " + std::to_string(j + 1));
    }
  }
  for (int k = 0; k <= n; ++k)
    for (int j = n; j < n + k; ++j)
      if (f.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] != 0)
        throw std::domain_error("truncated_gt_to_skew: entries past column n must be 0");

  ContentMatrix a = ContentMatrix::zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a.set(i, j, f.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] -
                      f.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
  std::vector<Int> outer(f.rows[static_cast<std::size_t>(n)].begin(),
                         f.rows[static_cast<std::size_t>(n)].begin() + n);
  Shape shape(DominantWeight(std::move(outer)), mu);
  return SkewTableau(std::move(shape), std::move(a));
}

SkewTableau companion(const SkewTableau& y) {
  const int n = y.rank();
  std::vector<Int> content = content_of(y);
  for (int i = 0; i + 1 < n; ++i)
    if (content[static_cast<std::size_t>(i)] < content[static_cast<std::size_t>(i + 1)])
      throw std::domain_error(
          "companion: content is not weakly decreasing, transpose is not a tableau");
  ContentMatrix a = ContentMatrix::zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.set(i, j, y.matrix().at(j, i));
  Shape shape(DominantWeight(std::move(content)), DominantWeight::zero(n));
  return SkewTableau(std::move(shape), std::move(a));
}

namespace {

// Backtracker over content matrices of non-skew semistandard tableaux with
// prescribed shape and content. Row j holds entries j..n; each prefix of row
// j is capped by the previous row's prefix one step behind.
struct SsytEnumerator {
  int n;
  const DominantWeight& shape;
  std::vector<Int> rem;                     // content still to place, per entry
  std::vector<std::vector<Int>> a;          // a[i-1][j-1]
  std::vector<Int> prev_prefix;             // prefix sums of row j-1
  const std::function<bool(const SkewTableau&)>& emit;
  bool stopped = false;

  SsytEnumerator(const DominantWeight& s, std::vector<Int> content,
                 const std::function<bool(const SkewTableau&)>& e)
      : n(s.rank()), shape(s), rem(std::move(content)),
        a(static_cast<std::size_t>(s.rank()),
          std::vector<Int>(static_cast<std::size_t>(s.rank()), 0)),
        emit(e) {}

  void run() {
    fill_row(1, std::vector<Int>(static_cast<std::size_t>(n) + 1, 0));
  }

  // prefix[l] = sum_{k<=l} a_{k,j-1} for the completed previous row.
  void fill_row(int j, std::vector<Int> prefix_above) {
    if (stopped) return;
    if (j > n) {
      for (Int r : rem)
        if (r != 0) return;
      Shape sh(shape, DominantWeight::zero(n));
      if (!emit(SkewTableau(std::move(sh), ContentMatrix(a)))) stopped = true;
      return;
    }
    std::vector<Int> prefix(static_cast<std::size_t>(n) + 1, 0);
    fill_entry(j, j, shape[j], prefix_above, prefix);
  }

  void fill_entry(int j, int i, Int remaining, const std::vector<Int>& prefix_above,
                  std::vector<Int>& prefix) {
    if (stopped) return;
    if (i > n) {
      if (remaining != 0) return;
      fill_row(j + 1, prefix);
      return;
    }
    // prefix[l] for l < j is 0; entries below the diagonal stay 0.
    Int hi = std::min(remaining, rem[static_cast<std::size_t>(i - 1)]);
    if (j > 1) {
      // sum_{k<=i} a_{k,j} <= sum_{k<=i-1} a_{k,j-1}
      hi = std::min(hi, prefix_above[static_cast<std::size_t>(i - 1)] -
                            prefix[static_cast<std::size_t>(i - 1)]);
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

}  // namespace

void enumerate_ssyt(const DominantWeight& shape, const std::vector<Int>& content,
                    const std::function<bool(const SkewTableau&)>& emit) {
  require_same_rank(shape.rank(), static_cast<int>(content.size()), "enumerate_ssyt");
  if (!shape.polynomial()) throw std::domain_error("enumerate_ssyt: shape must be polynomial");
  Int total = std::accumulate(content.begin(), content.end(), Int{0});
  for (Int c : content)
    if (c < 0) return;
  if (total != shape.total()) return;
  SsytEnumerator e(shape, content, emit);
  e.run();
}

long long kostka_by_tableaux(const DominantWeight& shape,
                             const std::vector<Int>& content) {
  long long count = 0;
  enumerate_ssyt(shape, content, [&](const SkewTableau&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace lrhive
