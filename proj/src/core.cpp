#include "lrhive/core.hpp"

#include <numeric>

namespace lrhive {

DominantWeight::DominantWeight(std::vector<Int> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw std::invalid_argument("DominantWeight: rank must be positive");
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i] < parts_[i + 1])
      throw std::invalid_argument("DominantWeight: parts must be weakly decreasing");
}

DominantWeight DominantWeight::zero(int n) {
  return DominantWeight(std::vector<Int>(static_cast<std::size_t>(n), 0));
}

Int DominantWeight::operator[](int i) const {
  if (i < 1 || i > rank())
    throw std::out_of_range("DominantWeight: index out of range");
  return parts_[static_cast<std::size_t>(i - 1)];
}

Int DominantWeight::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

DominantWeight dual_weight(const DominantWeight& w) {
  std::vector<Int> p(w.parts().rbegin(), w.parts().rend());
  for (Int& x : p) x = -x;
  return DominantWeight(std::move(p));
}

bool contains(const DominantWeight& outer, const DominantWeight& inner) {
  require_same_rank(outer.rank(), inner.rank(), "contains");
  for (int i = 1; i <= outer.rank(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

TArray::TArray(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("TArray: rank must be positive");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != i + 1)
      throw std::invalid_argument("TArray: row " + std::to_string(i + 1) +
                                  " must have exactly " + std::to_string(i + 1) +
                                  " entries");
}

TArray TArray::zero(int n) {
  std::vector<std::vector<Int>> rows;
  for (int i = 1; i <= n; ++i) rows.emplace_back(static_cast<std::size_t>(i), 0);
  return TArray(std::move(rows));
}

Int TArray::at(int i, int j) const {
  if (i < 1 || i > rank() || j < 1 || j > i)
    throw std::out_of_range("TArray: index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
  return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

void TArray::set(int i, int j, Int v) {
  if (i < 1 || i > rank() || j < 1 || j > i)
    throw std::out_of_range("TArray: index out of range");
  rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
}

const std::vector<Int>& TArray::row(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("TArray: row out of range");
  return rows_[static_cast<std::size_t>(i - 1)];
}

TArray dual_tarray(const TArray& t) {
  const int n = t.rank();
  TArray s = TArray::zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s.set(i, j, -t.at(i, i + 1 - j));
  return s;
}

std::vector<Int> weight_of(const TArray& t) {
  const int n = t.rank();
  std::vector<Int> w(static_cast<std::size_t>(n));
  Int prev = 0;
  for (int i = 1; i <= n; ++i) {
    Int sum = 0;
    for (Int x : t.row(i)) sum += x;
    w[static_cast<std::size_t>(i - 1)] = sum - prev;
    prev = sum;
  }
  return w;
}

HArray::HArray(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
  if (rows_.size() < 2)
    throw std::invalid_argument("HArray: rank must be positive");
  for (std::size_t b = 0; b < rows_.size(); ++b)
    if (rows_[b].size() != b + 1)
      throw std::invalid_argument("HArray: row " + std::to_string(b) +
                                  " must have exactly " + std::to_string(b + 1) +
                                  " entries");
  if (rows_[0][0] != 0)
    throw std::invalid_argument("HArray: h_{0,0} must be 0");
}

HArray HArray::zero(int n) {
  std::vector<std::vector<Int>> rows;
  for (int b = 0; b <= n; ++b) rows.emplace_back(static_cast<std::size_t>(b + 1), 0);
  return HArray(std::move(rows));
}

Int HArray::at(int a, int b) const {
  if (b < 0 || b > rank() || a < 0 || a > b)
    throw std::out_of_range("HArray: index (" + std::to_string(a) + "," +
                            std::to_string(b) + ") out of range");
  return rows_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
}

void HArray::set(int a, int b, Int v) {
  if (b < 0 || b > rank() || a < 0 || a > b)
    throw std::out_of_range("HArray: index out of range");
  if (a == 0 && b == 0 && v != 0)
    throw std::invalid_argument("HArray: h_{0,0} must be 0");
  rows_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = v;
}

const std::vector<Int>& HArray::row(int b) const {
  if (b < 0 || b > rank()) throw std::out_of_range("HArray: row out of range");
  return rows_[static_cast<std::size_t>(b)];
}

Shape::Shape(DominantWeight outer, DominantWeight inner)
    : outer_(std::move(outer)), inner_(std::move(inner)), empty_(false) {
  require_same_rank(outer_.rank(), inner_.rank(), "Shape");
  if (!outer_.polynomial() || !inner_.polynomial())
    throw std::invalid_argument("Shape: outer and inner must be polynomial weights");
  empty_ = !contains(outer_, inner_);
}

}  // namespace lrhive
