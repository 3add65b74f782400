#ifndef LRHIVE_HIVES_HPP
#define LRHIVE_HIVES_HPP

#include <utility>

#include "lrhive/core.hpp"

namespace lrhive {

struct RhombusFlags {
  bool rc1;
  bool rc2;
  bool rc3;
  bool all() const { return rc1 && rc2 && rc3; }
};

// RC(1): h_{a,b} + h_{a-1,b-1} >= h_{a-1,b} + h_{a,b-1},   1 <= a < b <= n
// RC(2): h_{a-1,b} + h_{a,b}   >= h_{a,b+1} + h_{a-1,b-1}, 1 <= a <= b < n
// RC(3): h_{a,b} + h_{a,b+1}   >= h_{a+1,b+1} + h_{a-1,b}, 1 <= a <= b < n
RhombusFlags check_rc(const HArray& h);
bool is_hive(const HArray& h);

// Boundary data (mu, nu, lambda) with |lambda| = |mu| + |nu|.
struct HiveBoundary {
  DominantWeight mu;
  DominantWeight nu;
  DominantWeight lambda;

  HiveBoundary(DominantWeight mu, DominantWeight nu, DominantWeight lambda);
  int rank() const { return mu.rank(); }
};

// Reads mu, nu, lambda off the three borders.
HiveBoundary boundary_of(const HArray& h);

// Borders filled from prefix sums; interior entries (1 <= a < b < n) are the
// listed holes and are set to 0 in `values`.
struct BoundaryFrame {
  HArray values;
  std::vector<std::pair<int, int>> holes;  // (a, b) pairs
};
BoundaryFrame make_boundary_frame(const HiveBoundary& b);

// Difference arrays along the three directions of the hive triangle:
//   T1: x_{b+1-a}^{(n-a)}   = h_{a,b+1}   - h_{a,b}     (SW-NE)
//   T2: y_{a+1}^{(b+1)}     = h_{a+1,b+1} - h_{a,b+1}   (E-W)
//   T3: z_{a+1}^{(n+a-b)}   = h_{a+1,b+1} - h_{a,b}     (SE-NW)
TArray derived_t1(const HArray& h);
TArray derived_t2(const HArray& h);
TArray derived_t3(const HArray& h);

// Integrate a derived array back against a boundary. Throws std::domain_error
// naming the first mismatched border entry when the array and boundary are
// inconsistent.
HArray reconstruct_from_t1(const HiveBoundary& b, const TArray& t1);
HArray reconstruct_from_t2(const HiveBoundary& b, const TArray& t2);

// phi_1(T1(H)) and phi_2(T2(H)) over 0 <= a < b < n, in lexicographic (a,b)
// order. The two vectors agree for every h-array.
std::pair<std::vector<Int>, std::vector<Int>> fiber_coordinates(const HArray& h);

}  // namespace lrhive

#endif
