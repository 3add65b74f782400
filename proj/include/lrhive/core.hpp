#ifndef LRHIVE_CORE_HPP
#define LRHIVE_CORE_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrhive {

// Entry type. Hive entries are prefix sums of the boundary weights, so at
// desk scale (parts up to a few thousand) 64 bits leave a huge margin.
using Int = long long;

// Weakly decreasing integer sequence of fixed length n.
// "Polynomial" means the last (smallest) part is non-negative.
class DominantWeight {
 public:
  explicit DominantWeight(std::vector<Int> parts);
  static DominantWeight zero(int n);

  int rank() const { return static_cast<int>(parts_.size()); }
  // 1-based access, matching the subscripts lambda_1 >= ... >= lambda_n.
  Int operator[](int i) const;
  const std::vector<Int>& parts() const { return parts_; }
  bool polynomial() const { return parts_.back() >= 0; }
  Int total() const;

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

 private:
  std::vector<Int> parts_;
};

// (-w_n, ..., -w_1); an involution.
DominantWeight dual_weight(const DominantWeight& w);

// True iff inner_i <= outer_i for all i.
bool contains(const DominantWeight& outer, const DominantWeight& inner);

// Triangular integer array t_j^(i), 1 <= j <= i <= n. Row i has i entries.
// Rows are stored bottom-up: row(1) is the single-entry row.
class TArray {
 public:
  explicit TArray(std::vector<std::vector<Int>> rows);
  static TArray zero(int n);

  int rank() const { return static_cast<int>(rows_.size()); }
  Int at(int i, int j) const;       // t_j^(i), 1-based, range checked
  void set(int i, int j, Int v);
  const std::vector<Int>& row(int i) const;  // row i, length i

  // The type is the n-th row; not validated as dominant here.
  const std::vector<Int>& type() const { return rows_.back(); }

  friend bool operator==(const TArray&, const TArray&) = default;
  friend auto operator<=>(const TArray&, const TArray&) = default;

 private:
  std::vector<std::vector<Int>> rows_;
};

// s_j^(i) = -t_{i+1-j}^(i); an involution.
TArray dual_tarray(const TArray& t);

// w_1 = t_1^(1); w_i = sum(row i) - sum(row i-1).
std::vector<Int> weight_of(const TArray& t);

// Triangular integer array h_{a,b}, 0 <= a <= b <= n, with h_{0,0} = 0.
// Row b has b+1 entries.
class HArray {
 public:
  explicit HArray(std::vector<std::vector<Int>> rows);
  static HArray zero(int n);

  int rank() const { return static_cast<int>(rows_.size()) - 1; }
  Int at(int a, int b) const;       // h_{a,b}, range checked
  void set(int a, int b, Int v);
  const std::vector<Int>& row(int b) const;

  friend bool operator==(const HArray&, const HArray&) = default;
  friend auto operator<=>(const HArray&, const HArray&) = default;

 private:
  std::vector<std::vector<Int>> rows_;
};

// Skew shape outer/inner with both weights polynomial and of equal rank.
// A non-contained pair is a valid "empty" shape (the associated tableau
// families are empty), not an error.
class Shape {
 public:
  Shape(DominantWeight outer, DominantWeight inner);

  int rank() const { return outer_.rank(); }
  const DominantWeight& outer() const { return outer_; }
  const DominantWeight& inner() const { return inner_; }
  bool empty() const { return empty_; }

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  DominantWeight outer_;
  DominantWeight inner_;
  bool empty_;
};

inline void require_same_rank(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": rank mismatch");
}

}  // namespace lrhive

#endif
