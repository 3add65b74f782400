#ifndef LRHIVE_TABLEAUX_HPP
#define LRHIVE_TABLEAUX_HPP

#include <functional>

#include "lrhive/core.hpp"

namespace lrhive {

// n x n matrix a_{i,j} = number of i's in the j-th row. Entries non-negative.
class ContentMatrix {
 public:
  explicit ContentMatrix(std::vector<std::vector<Int>> a);
  static ContentMatrix zero(int n);

  int rank() const { return static_cast<int>(a_.size()); }
  Int at(int i, int j) const;  // 1-based
  void set(int i, int j, Int v);
  const std::vector<std::vector<Int>>& rows() const { return a_; }

  friend bool operator==(const ContentMatrix&, const ContentMatrix&) = default;

 private:
  std::vector<std::vector<Int>> a_;
};

// A skew tableau stored as (shape, content matrix) with the canonical
// row-weakly-increasing filling. The matrix plus the shape determines the
// filling completely.
class SkewTableau {
 public:
  SkewTableau(Shape shape, ContentMatrix a);

  int rank() const { return shape_.rank(); }
  const Shape& shape() const { return shape_; }
  const ContentMatrix& matrix() const { return a_; }
  bool non_skew() const;  // inner shape is zero

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
  friend auto operator<=>(const SkewTableau& x, const SkewTableau& y) {
    return x.a_.rows() <=> y.a_.rows();
  }

 private:
  Shape shape_;
  ContentMatrix a_;
};

// Raw-matrix forms of the defining inequalities. These take arbitrary integer
// matrices so condition translation can be probed on perturbed objects whose
// "matrices" are no longer valid contents.
bool semistandard_condition(const DominantWeight& inner,
                            const std::vector<std::vector<Int>>& a);
bool yamanouchi_condition(const std::vector<std::vector<Int>>& a);

bool is_semistandard(const SkewTableau& y);
std::vector<int> reverse_reading_word(const SkewTableau& y);
bool is_yamanouchi_word(const std::vector<int>& word);
bool is_yamanouchi_symbolic(const SkewTableau& y);
bool is_lr_tableau(const SkewTableau& y);

// nu_k = sum_j a_{k,j}.
std::vector<Int> content_of(const SkewTableau& y);

// t_j^(i) = sum_{k<=i} a_{k,j}; requires a non-skew semistandard tableau.
TArray tableau_to_gt(const SkewTableau& y);
// a_{i,j} = t_j^(i) - t_j^(i-1); requires a GT pattern with non-negative
// entries. Inverse of tableau_to_gt.
SkewTableau gt_to_tableau(const TArray& t);

// Rows n..2n of the GL_2n pattern attached to a skew tableau: rows[k] is
// pattern row n+k (length n+k), k = 0..n. rows[0] equals the inner shape and
// rows[n] equals (outer, 0^n). The omitted bottom rows are the inner-shape
// prefixes.
struct TruncatedGT {
  int n;
  std::vector<std::vector<Int>> rows;
};

TruncatedGT skew_to_truncated_gt(const SkewTableau& y);
SkewTableau truncated_gt_to_skew(const TruncatedGT& f, const DominantWeight& mu);

// a_{i,j}(Y^c) = a_{j,i}(Y). Shape of the companion is the content of Y.
SkewTableau companion(const SkewTableau& y);

// Semistandard tableaux of the given non-skew shape and exact content,
// enumerated by content-matrix backtracking. Emit returns false to stop.
void enumerate_ssyt(const DominantWeight& shape, const std::vector<Int>& content,
                    const std::function<bool(const SkewTableau&)>& emit);
long long kostka_by_tableaux(const DominantWeight& shape,
                             const std::vector<Int>& content);

}  // namespace lrhive

#endif
