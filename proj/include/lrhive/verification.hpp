#ifndef LRHIVE_VERIFICATION_HPP
#define LRHIVE_VERIFICATION_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lrhive/enumeration.hpp"
#include "lrhive/oracle.hpp"

namespace lrhive {

using Rng = std::mt19937_64;

// Generators --------------------------------------------------------------

TArray random_tarray(Rng& rng, int n, Int lo, Int hi);
HArray random_harray(Rng& rng, int n, Int lo, Int hi);

// All polynomial dominant weights with n parts, each at most max_part.
std::vector<DominantWeight> partitions_up_to(int n, Int max_part);
// All partitions of `total` into at most n parts, padded to rank n.
std::vector<DominantWeight> partitions_of(Int total, int n);

// A random (mu, nu, lambda) with |lambda| = |mu| + |nu|, plus an h-array on
// those borders with uniformly random interior entries.
struct BorderedSample {
  LRTriple triple;
  HArray harray;
};
BorderedSample random_bordered_harray(Rng& rng, int n, Int max_part);

// Structural laws, each returning true when the stated law holds ----------

// Rhombus/interlacing equivalences, items (1)-(5), on an arbitrary h-array.
bool ic_rhombus_equivalences_hold(const HArray& h);
// Hive iff both T1 and T2 are GT patterns.
bool hive_iff_derived_gt(const HArray& h);
// phi_1(T1(H)) = phi_2(T2(H)).
bool fiber_identity_holds(const HArray& h);
// IC(1) on T iff IC(2) on T*, and vice versa.
bool dual_ic_swap_holds(const TArray& t);
// All exponents of T bounded by successive differences of `bound`.
bool exponent_bounds_hold(const TArray& t, const DominantWeight& bound);
// On a bordered h-array: both weight formulas and the three boundary
// equivalences relating T1, T1* and T2.
bool bordered_equivalences_hold(const HArray& h, const LRTriple& t);

// Condition translation ---------------------------------------------------

// Raw condition flags of the three corresponding objects computed from an
// arbitrary bordered h-array (no validity assumed).
struct ConditionFlags {
  bool rc1, rc2, rc3;          // hive
  bool ic1, ic2, exponents;    // GZ scheme T1*(H) against nu*
  bool nonneg, ss, yam;        // tableau candidate matrix
};
ConditionFlags condition_flags(const HArray& h, const LRTriple& t);
// rc1 == ic1 == nonneg, rc2 == ic2 == ss, rc3 == exponents == yam.
bool condition_columns_agree(const ConditionFlags& f);

// Model agreement ---------------------------------------------------------

struct ModelCounts {
  long long lr, hive, gz1, gz2, oracle;
  bool agree() const {
    return lr == hive && lr == gz1 && lr == gz2 && lr == oracle;
  }
};
ModelCounts model_counts(const LRTriple& t);

// Verification sweep ------------------------------------------------------

struct VerifySweepConfig {
  int n = 3;
  Int max_part = 3;
  bool exhaustive = true;
  int samples = 0;          // used when !exhaustive
  std::uint64_t seed = 0;
  int threads = 1;
  int random_arrays = 2000;  // size of the random-array batteries
};

struct VerifyReport {
  long long triples_checked = 0;
  long long objects_checked = 0;
  long long arrays_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

VerifyReport run_verification(const VerifySweepConfig& config);

}  // namespace lrhive

#endif
