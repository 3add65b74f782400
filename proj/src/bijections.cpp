#include "lrhive/bijections.hpp"

namespace lrhive {

LRTriple::LRTriple(DominantWeight m, DominantWeight v, DominantWeight l)
    : mu(std::move(m)), nu(std::move(v)), lambda(std::move(l)) {
  require_same_rank(mu.rank(), nu.rank(), "LRTriple");
  require_same_rank(mu.rank(), lambda.rank(), "LRTriple");
  if (!mu.polynomial() || !nu.polynomial() || !lambda.polynomial())
    throw std::invalid_argument("LRTriple: weights must be polynomial");
}

GZTriple gz1_of(const LRTriple& t) {
  const DominantWeight ls = dual_weight(t.lambda);
  const DominantWeight ns = dual_weight(t.nu);
  std::vector<Int> w(static_cast<std::size_t>(t.rank()));
  for (int i = 1; i <= t.rank(); ++i)
    w[static_cast<std::size_t>(i - 1)] = ls[i] - ns[i];
  return GZTriple(dual_weight(t.mu), std::move(w), ns);
}

GZTriple gz2_of(const LRTriple& t) {
  std::vector<Int> w(static_cast<std::size_t>(t.rank()));
  for (int i = 1; i <= t.rank(); ++i)
    w[static_cast<std::size_t>(i - 1)] = t.lambda[i] - t.mu[i];
  return GZTriple(t.nu, std::move(w), t.mu);
}

namespace {

void require_lr_member(const SkewTableau& y, const LRTriple& t, const char* op) {
  if (y.shape().outer() != t.lambda || y.shape().inner() != t.mu)
    throw std::domain_error(std::string(op) + ": tableau shape does not match triple");
  if (content_of(y) != t.nu.parts())
    throw std::domain_error(std::string(op) + ": tableau content does not match triple");
  if (!is_lr_tableau(y))
    throw std::domain_error(std::string(op) + ": input is not a LR tableau");
}

}  // namespace

TArray middle_subarray(const TruncatedGT& f) {
  const int n = f.n;
  TArray t = TArray::zero(n);
  // T_Z row i (bottom-up) is fragment row n-i, columns n-i+1 .. n.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      t.set(i, j, f.rows[static_cast<std::size_t>(n - i)]
                        [static_cast<std::size_t>(n - i + j - 1)]);
  return t;
}

TArray phi_lr_to_gz(const SkewTableau& y, const LRTriple& t) {
  require_lr_member(y, t, "phi_lr_to_gz");
  return dual_tarray(middle_subarray(skew_to_truncated_gt(y)));
}

SkewTableau phi_gz_to_lr(const TArray& s, const LRTriple& t) {
  if (!is_gz_scheme(s, gz1_of(t)))
    throw std::domain_error("phi_gz_to_lr: input is not in GZ(mu*, lambda*-nu*, nu*)");
  const int n = t.rank();
  const TArray tz = dual_tarray(s);
  // Reassemble the truncated pattern: lambda on the left, T_Z in the middle,
  // zeroes on the right.
  TruncatedGT f;
  f.n = n;
  for (int k = 0; k <= n; ++k) {
    std::vector<Int> row(static_cast<std::size_t>(n + k), 0);
    for (int j = 1; j <= n; ++j) {
      if (j <= k)
        row[static_cast<std::size_t>(j - 1)] = t.lambda[j];
      else
        row[static_cast<std::size_t>(j - 1)] = tz.at(n - k, j - k);
    }
    f.rows.push_back(std::move(row));
  }
  return truncated_gt_to_skew(f, t.mu);
}

TArray psi_lr_to_gz2(const SkewTableau& y, const LRTriple& t) {
  require_lr_member(y, t, "psi_lr_to_gz2");
  return tableau_to_gt(companion(y));
}

SkewTableau psi_gz2_to_lr(const TArray& s, const LRTriple& t) {
  if (!is_gz_scheme(s, gz2_of(t)))
    throw std::domain_error("psi_gz2_to_lr: input is not in GZ(nu, lambda-mu, mu)");
  const int n = t.rank();
  const SkewTableau yc = gt_to_tableau(s);
  ContentMatrix a = ContentMatrix::zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a.set(i, j, yc.matrix().at(j, i));
  Shape shape(t.lambda, t.mu);
  return SkewTableau(std::move(shape), std::move(a));
}

HArray lr_to_hive(const SkewTableau& y, const LRTriple& t) {
  const TArray s = phi_lr_to_gz(y, t);
  return reconstruct_from_t1(t.boundary(), dual_tarray(s));
}

HArray lr_to_hive_direct(const SkewTableau& y, const LRTriple& t) {
  require_lr_member(y, t, "lr_to_hive_direct");
  const int n = t.rank();
  HArray h = HArray::zero(n);
  for (int m = 0; m <= n; ++m)
    for (int l = 0; l <= m; ++l) {
      Int count = 0;
      for (int j = 1; j <= m; ++j) {
        count += t.mu[j];  // empty boxes in row j
        for (int k = 1; k <= l; ++k) count += y.matrix().at(k, j);
      }
      if (l != 0 || m != 0) h.set(l, m, count);
    }
  return h;
}

SkewTableau hive_to_lr(const HArray& h, const LRTriple& t) {
  if (!is_hive(h)) throw std::domain_error("hive_to_lr: input is not a hive");
  const HiveBoundary b = boundary_of(h);
  if (b.mu != t.mu || b.nu != t.nu || b.lambda != t.lambda)
    throw std::domain_error("hive_to_lr: hive boundary does not match triple");
  return phi_gz_to_lr(dual_tarray(derived_t1(h)), t);
}

std::pair<TArray, TArray> hive_gz_maps(const HArray& h) {
  if (!is_hive(h)) throw std::domain_error("hive_gz_maps: input is not a hive");
  return {dual_tarray(derived_t1(h)), derived_t2(h)};
}

}  // namespace lrhive
