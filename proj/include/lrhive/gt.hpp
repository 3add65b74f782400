#ifndef LRHIVE_GT_HPP
#define LRHIVE_GT_HPP

#include "lrhive/core.hpp"

namespace lrhive {

// Names a family GZ(type, weight, bound): GT patterns of the given type and
// weight whose exponents are bounded by successive differences of bound_wt.
struct GZTriple {
  DominantWeight type_wt;
  std::vector<Int> weight;
  DominantWeight bound_wt;

  GZTriple(DominantWeight type, std::vector<Int> w, DominantWeight bound);
  int rank() const { return type_wt.rank(); }
};

// IC(1): t_j^(i+1) >= t_j^(i) for 1 <= j <= i <= n-1.
bool check_ic1(const TArray& t);
// IC(2): t_j^(i) >= t_{j+1}^(i+1) for 1 <= j <= i <= n-1.
bool check_ic2(const TArray& t);
bool is_gt_pattern(const TArray& t);

// eps_j^(i)(T) = sum_{h<j} (t_h^(i+1) - 2 t_h^(i) + t_h^(i-1))
//               + (t_j^(i+1) - t_j^(i)),   for 1 <= j <= i <= n-1.
Int exponent(const TArray& t, int i, int j);

// GT pattern of the given type and weight with all exponent bounds
// eps_j^(i) <= bound_i - bound_{i+1} satisfied.
bool is_gz_scheme(const TArray& t, const GZTriple& spec);

}  // namespace lrhive

#endif
