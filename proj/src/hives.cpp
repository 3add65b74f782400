#include "lrhive/hives.hpp"

#include <string>

namespace lrhive {

RhombusFlags check_rc(const HArray& h) {
  const int n = h.rank();
  RhombusFlags f{true, true, true};
  for (int b = 1; b <= n && f.rc1; ++b)
    for (int a = 1; a < b; ++a)
      if (h.at(a, b) + h.at(a - 1, b - 1) < h.at(a - 1, b) + h.at(a, b - 1)) {
        f.rc1 = false;
        break;
      }
  for (int b = 1; b < n && f.rc2; ++b)
    for (int a = 1; a <= b; ++a)
      if (h.at(a - 1, b) + h.at(a, b) < h.at(a, b + 1) + h.at(a - 1, b - 1)) {
        f.rc2 = false;
        break;
      }
  for (int b = 1; b < n && f.rc3; ++b)
    for (int a = 1; a <= b; ++a)
      if (h.at(a, b) + h.at(a, b + 1) < h.at(a + 1, b + 1) + h.at(a - 1, b)) {
        f.rc3 = false;
        break;
      }
  return f;
}

bool is_hive(const HArray& h) { return check_rc(h).all(); }

HiveBoundary::HiveBoundary(DominantWeight m, DominantWeight v, DominantWeight l)
    : mu(std::move(m)), nu(std::move(v)), lambda(std::move(l)) {
  require_same_rank(mu.rank(), nu.rank(), "HiveBoundary");
  require_same_rank(mu.rank(), lambda.rank(), "HiveBoundary");
  if (!mu.polynomial() || !nu.polynomial() || !lambda.polynomial())
    throw std::invalid_argument("HiveBoundary: weights must be polynomial");
  if (lambda.total() != mu.total() + nu.total())
    throw std::invalid_argument("HiveBoundary: |lambda| must equal |mu| + |nu|");
}

HiveBoundary boundary_of(const HArray& h) {
  const int n = h.rank();
  std::vector<Int> mu, nu, lambda;
  for (int i = 1; i <= n; ++i) {
    mu.push_back(h.at(0, i) - h.at(0, i - 1));
    nu.push_back(h.at(i, n) - h.at(i - 1, n));
    lambda.push_back(h.at(i, i) - h.at(i - 1, i - 1));
  }
  return HiveBoundary(DominantWeight(std::move(mu)), DominantWeight(std::move(nu)),
                      DominantWeight(std::move(lambda)));
}

BoundaryFrame make_boundary_frame(const HiveBoundary& b) {
  const int n = b.rank();
  HArray h = HArray::zero(n);
  Int acc = 0;
  for (int i = 1; i <= n; ++i) {
    acc += b.mu[i];
    h.set(0, i, acc);  // mu prefix
  }
  const Int mu_total = acc;
  acc = 0;
  for (int i = 1; i <= n; ++i) {
    acc += b.nu[i];
    h.set(i, n, mu_total + acc);
  }
  acc = 0;
  for (int i = 1; i <= n; ++i) {
    acc += b.lambda[i];
    if (i < n) h.set(i, i, acc);
    // h_{n,n} is doubly determined; |lambda| = |mu| + |nu| makes both agree.
  }
  BoundaryFrame frame{std::move(h), {}};
  for (int bb = 2; bb < n; ++bb)
    for (int a = 1; a < bb; ++a) frame.holes.emplace_back(a, bb);
  return frame;
}

TArray derived_t1(const HArray& h) {
  const int n = h.rank();
  TArray t = TArray::zero(n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      t.set(n - a, b + 1 - a, h.at(a, b + 1) - h.at(a, b));
  return t;
}

TArray derived_t2(const HArray& h) {
  const int n = h.rank();
  TArray t = TArray::zero(n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      t.set(b + 1, a + 1, h.at(a + 1, b + 1) - h.at(a, b + 1));
  return t;
}

TArray derived_t3(const HArray& h) {
  const int n = h.rank();
  TArray t = TArray::zero(n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      t.set(n + a - b, a + 1, h.at(a + 1, b + 1) - h.at(a, b));
  return t;
}

namespace {

[[noreturn]] void border_mismatch(const char* op, int a, int b) {
  throw std::domain_error(std::string(op) + ": border mismatch at h_{" +
                          std::to_string(a) + "," + std::to_string(b) + "}");
}

Int prefix(const DominantWeight& w, int k) {
  Int s = 0;
  for (int i = 1; i <= k; ++i) s += w[i];
  return s;
}

}  // namespace

HArray reconstruct_from_t1(const HiveBoundary& bd, const TArray& t) {
  const int n = bd.rank();
  require_same_rank(n, t.rank(), "reconstruct_from_t1");
  HArray h = HArray::zero(n);
  // Anchor each SW-NE line at the lambda border and integrate eastwards.
  for (int a = 0; a < n; ++a) {
    h.set(a, a, prefix(bd.lambda, a));
    for (int b = a; b < n; ++b)
      h.set(a, b + 1, h.at(a, b) + t.at(n - a, b + 1 - a));
  }
  h.set(n, n, prefix(bd.lambda, n));
  for (int b = 1; b <= n; ++b)
    if (h.at(0, b) != prefix(bd.mu, b)) border_mismatch("reconstruct_from_t1", 0, b);
  const Int mu_total = prefix(bd.mu, n);
  for (int a = 1; a <= n; ++a)
    if (h.at(a, n) != mu_total + prefix(bd.nu, a))
      border_mismatch("reconstruct_from_t1", a, n);
  return h;
}

HArray reconstruct_from_t2(const HiveBoundary& bd, const TArray& t) {
  const int n = bd.rank();
  require_same_rank(n, t.rank(), "reconstruct_from_t2");
  HArray h = HArray::zero(n);
  // Anchor each row at the mu border and integrate southeastwards.
  for (int b = 1; b <= n; ++b) {
    h.set(0, b, prefix(bd.mu, b));
    for (int a = 0; a < b; ++a) h.set(a + 1, b, h.at(a, b) + t.at(b, a + 1));
  }
  for (int b = 1; b <= n; ++b)
    if (h.at(b, b) != prefix(bd.lambda, b)) border_mismatch("reconstruct_from_t2", b, b);
  const Int mu_total = prefix(bd.mu, n);
  for (int a = 1; a <= n; ++a)
    if (h.at(a, n) != mu_total + prefix(bd.nu, a))
      border_mismatch("reconstruct_from_t2", a, n);
  return h;
}

std::pair<std::vector<Int>, std::vector<Int>> fiber_coordinates(const HArray& h) {
  const int n = h.rank();
  const TArray t1 = derived_t1(h);
  const TArray t2 = derived_t2(h);
  std::vector<Int> phi1, phi2;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      phi1.push_back(t1.at(n - a - 1, b - a) - t1.at(n - a, b + 1 - a));
      phi2.push_back(t2.at(b + 1, a + 1) - t2.at(b, a + 1));
    }
  return {std::move(phi1), std::move(phi2)};
}

}  // namespace lrhive
