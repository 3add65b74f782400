#ifndef LRHIVE_BIJECTIONS_HPP
#define LRHIVE_BIJECTIONS_HPP

#include <utility>

#include "lrhive/core.hpp"
#include "lrhive/gt.hpp"
#include "lrhive/hives.hpp"
#include "lrhive/tableaux.hpp"

namespace lrhive {

// A triple (mu, nu, lambda) of polynomial dominant weights of equal rank,
// naming the families LR(lambda/mu, nu), H(mu,nu,lambda) and the two GZ
// flavors. Size and containment are not enforced here; infeasible triples
// simply have empty families.
struct LRTriple {
  DominantWeight mu;
  DominantWeight nu;
  DominantWeight lambda;

  LRTriple(DominantWeight mu, DominantWeight nu, DominantWeight lambda);
  int rank() const { return mu.rank(); }
  bool sizes_match() const { return lambda.total() == mu.total() + nu.total(); }
  bool mu_contained() const { return contains(lambda, mu); }
  bool feasible() const { return sizes_match() && mu_contained(); }
  HiveBoundary boundary() const { return HiveBoundary(mu, nu, lambda); }
};

// GZ(mu*, lambda* - nu*, nu*) and GZ(nu, lambda - mu, mu).
GZTriple gz1_of(const LRTriple& t);
GZTriple gz2_of(const LRTriple& t);

// phi: LR tableau -> GZ scheme via the truncated GT pattern's middle
// subarray T_Z, returned as its dual. The middle subarray itself, as a rank-n
// t-array, is also exposed for reuse by the hive maps.
TArray middle_subarray(const TruncatedGT& f);
TArray phi_lr_to_gz(const SkewTableau& y, const LRTriple& t);
SkewTableau phi_gz_to_lr(const TArray& s, const LRTriple& t);

// psi: LR tableau -> GZ scheme via the companion tableau's GT pattern.
TArray psi_lr_to_gz2(const SkewTableau& y, const LRTriple& t);
SkewTableau psi_gz2_to_lr(const TArray& s, const LRTriple& t);

// LR tableau <-> hive, via T_Z and the boundary.
HArray lr_to_hive(const SkewTableau& y, const LRTriple& t);
// Direct counting formula: h_{l,m} = number of empty boxes plus entries <= l
// in the first m rows. Agrees entrywise with lr_to_hive.
HArray lr_to_hive_direct(const SkewTableau& y, const LRTriple& t);
SkewTableau hive_to_lr(const HArray& h, const LRTriple& t);

// H -> (T1*(H), T2(H)); both are GZ schemes of the respective flavors.
std::pair<TArray, TArray> hive_gz_maps(const HArray& h);

}  // namespace lrhive

#endif
