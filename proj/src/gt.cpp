#include "lrhive/gt.hpp"

namespace lrhive {

GZTriple::GZTriple(DominantWeight type, std::vector<Int> w, DominantWeight bound)
    : type_wt(std::move(type)), weight(std::move(w)), bound_wt(std::move(bound)) {
  require_same_rank(type_wt.rank(), static_cast<int>(weight.size()), "GZTriple");
  require_same_rank(type_wt.rank(), bound_wt.rank(), "GZTriple");
}

bool check_ic1(const TArray& t) {
  const int n = t.rank();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= i; ++j)
      if (t.at(i + 1, j) < t.at(i, j)) return false;
  return true;
}

bool check_ic2(const TArray& t) {
  const int n = t.rank();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= i; ++j)
      if (t.at(i, j) < t.at(i + 1, j + 1)) return false;
  return true;
}

bool is_gt_pattern(const TArray& t) { return check_ic1(t) && check_ic2(t); }

Int exponent(const TArray& t, int i, int j) {
  if (i < 1 || i > t.rank() - 1 || j < 1 || j > i)
    throw std::out_of_range("exponent: index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
  Int e = 0;
  for (int h = 1; h < j; ++h)
    e += t.at(i + 1, h) - 2 * t.at(i, h) + t.at(i - 1, h);
  e += t.at(i + 1, j) - t.at(i, j);
  return e;
}

bool is_gz_scheme(const TArray& t, const GZTriple& spec) {
  require_same_rank(t.rank(), spec.rank(), "is_gz_scheme");
  if (!is_gt_pattern(t)) return false;
  if (t.type() != spec.type_wt.parts()) return false;
  if (weight_of(t) != spec.weight) return false;
  const int n = t.rank();
  for (int i = 1; i < n; ++i) {
    const Int cap = spec.bound_wt[i] - spec.bound_wt[i + 1];
    for (int j = 1; j <= i; ++j)
      if (exponent(t, i, j) > cap) return false;
  }
  return true;
}

}  // namespace lrhive
