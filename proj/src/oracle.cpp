#include "lrhive/oracle.hpp"

#include <algorithm>
#include <functional>

#include "lrhive/gt.hpp"

namespace lrhive {

SchurPoly::SchurPoly(int n, TermMap terms) : n_(n), terms_(std::move(terms)) {
  if (n_ < 1) throw std::invalid_argument("SchurPoly: rank must be positive");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (static_cast<int>(it->first.size()) != n_)
      throw std::invalid_argument("SchurPoly: exponent vector of wrong length");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

SchurPoly SchurPoly::unit(int n) {
  TermMap t;
  t[std::vector<Int>(static_cast<std::size_t>(n), 0)] = 1;
  return SchurPoly(n, std::move(t));
}

long long SchurPoly::coefficient(const std::vector<Int>& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

namespace {

// Walks all GT patterns of the given type (top row), accumulating weights.
void for_each_gt_weight(const DominantWeight& type,
                        const std::function<void(const std::vector<Int>&)>& visit) {
  const int n = type.rank();
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    rows[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(i));
  rows[static_cast<std::size_t>(n - 1)] = type.parts();

  std::vector<Int> weight(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, Int)> fill = [&](int i, int j, Int row_sum) {
    if (i == 0) {
      Int prev = 0;
      for (int k = 1; k <= n; ++k) {
        Int s = 0;
        for (Int x : rows[static_cast<std::size_t>(k - 1)]) s += x;
        weight[static_cast<std::size_t>(k - 1)] = s - prev;
        prev = s;
      }
      visit(weight);
      return;
    }
    if (j > i) {
      fill(i - 1, 1, 0);
      return;
    }
    const auto& above = rows[static_cast<std::size_t>(i)];
    const Int lo = above[static_cast<std::size_t>(j)];
    const Int hi = above[static_cast<std::size_t>(j - 1)];
    for (Int v = lo; v <= hi; ++v) {
      rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
      fill(i, j + 1, row_sum + v);
    }
  };
  if (n == 1)
    fill(0, 1, 0);
  else
    fill(n - 1, 1, 0);
}

bool weakly_decreasing(const std::vector<Int>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

}  // namespace

SchurPoly schur(const DominantWeight& lambda) {
  if (!lambda.polynomial())
    throw std::domain_error("schur: weight must be polynomial");
  SchurPoly::TermMap terms;
  for_each_gt_weight(lambda, [&](const std::vector<Int>& w) { ++terms[w]; });
  return SchurPoly(lambda.rank(), std::move(terms));
}

SchurPoly multiply(const SchurPoly& p, const SchurPoly& q) {
  require_same_rank(p.rank(), q.rank(), "multiply");
  SchurPoly::TermMap terms;
  std::vector<Int> e(static_cast<std::size_t>(p.rank()));
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ep[k] + eq[k];
      terms[e] += cp * cq;
    }
  return SchurPoly(p.rank(), std::move(terms));
}

std::map<std::vector<Int>, long long> schur_decompose(SchurPoly p) {
  // Spot check symmetry: every exponent's coefficient must match that of its
  // sorted-decreasing representative.
  for (const auto& [e, c] : p.terms()) {
    std::vector<Int> rep = e;
    std::sort(rep.begin(), rep.end(), std::greater<>());
    if (p.coefficient(rep) != c)
      throw std::domain_error("schur_decompose: input is not symmetric");
  }
  std::map<std::vector<Int>, long long> result;
  SchurPoly::TermMap work = p.terms();
  while (!work.empty()) {
    const auto& [lead, c] = *work.rbegin();  // lexicographically greatest
    if (!weakly_decreasing(lead))
      throw std::domain_error("schur_decompose: input is not symmetric");
    if (c < 0)
      throw std::domain_error("schur_decompose: negative coefficient, input is not Schur-positive");
    std::vector<Int> lam = lead;
    const long long coeff = c;
    result[lam] += coeff;
    const SchurPoly s = schur(DominantWeight(lam));
    for (const auto& [e, sc] : s.terms()) {
      auto it = work.try_emplace(e, 0).first;
      it->second -= coeff * sc;
      if (it->second == 0) work.erase(it);
    }
  }
  return result;
}

long long lr_coefficient_oracle(const LRTriple& t) {
  const auto decomposition = schur_decompose(multiply(schur(t.mu), schur(t.nu)));
  auto it = decomposition.find(t.lambda.parts());
  return it == decomposition.end() ? 0 : it->second;
}

}  // namespace lrhive
