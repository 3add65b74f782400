// Acceptance gate: one pass/fail line per criterion, non-zero exit on any
// failure. Criteria mirror the library's verification helpers but are phrased
// directly against the public API.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "lrhive/json_io.hpp"
#include "lrhive/render.hpp"
#include "lrhive/verification.hpp"
#include "golden.hpp"

using namespace lrhive;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int k, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

int env_threads() {
  const char* v = std::getenv("LRHIVE_THREADS");
  if (!v) return 4;
  int k = std::atoi(v);
  return k >= 1 ? k : 1;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion1_golden_example() {
  const auto t0 = Clock::now();
  const LRTriple t = golden::triple();
  const SkewTableau y = golden::tableau();
  const HArray h = lr_to_hive(y, t);
  bool ok = h.at(1, 2) == 15 && h.at(1, 3) == 16 && h.at(2, 3) == 20 &&
            h == golden::hive();
  const TArray s2 = psi_lr_to_gz2(y, t);
  ok = ok && s2 == TArray({{6}, {7, 3}, {7, 4, 3}, {7, 5, 3, 2}});
  const double dt = seconds_since(t0);
  report(1, "golden example maps (hive interior 15,16,20; gz2 pattern)",
         ok && dt < 1.0, "took " + std::to_string(dt) + "s");
}

// Criteria 2 and 3 share one sweep over all n=3 triples with parts <= 3.
void criteria23_exhaustive_sweep() {
  const auto t0 = Clock::now();
  VerifySweepConfig cfg;
  cfg.n = 3;
  cfg.max_part = 3;
  cfg.exhaustive = true;
  cfg.threads = env_threads();
  cfg.random_arrays = 0;
  VerifyReport rep = run_verification(cfg);
  const double dt = seconds_since(t0);
  report(2, "four-model agreement, exhaustive n=3 parts<=3",
         rep.ok() && rep.triples_checked > 0,
         rep.summary() + ", took " + std::to_string(dt) + "s");
  report(3, "round-trip laws and direct-formula agreement on all objects",
         rep.ok() && rep.objects_checked > 0,
         std::to_string(rep.objects_checked) + " objects");
}

void criterion4_random_arrays() {
  Rng rng(1004);
  int bad = 0;
  for (int k = 0; k < 10000; ++k) {
    const int n = 2 + k % 4;
    const HArray h = random_harray(rng, n, -5, 5);
    if (!ic_rhombus_equivalences_hold(h)) ++bad;
    if (!hive_iff_derived_gt(h)) ++bad;
    if (!fiber_identity_holds(h)) ++bad;
    if (!dual_ic_swap_holds(random_tarray(rng, n, -5, 5))) ++bad;
  }
  report(4, "biconditionals on 10000 random arrays", bad == 0,
         std::to_string(bad) + " failures");
}

void criterion5_bordered_arrays() {
  Rng rng(1005);
  int bad = 0;
  for (int k = 0; k < 2000; ++k) {
    const BorderedSample s = random_bordered_harray(rng, 2 + k % 4, 3);
    if (!bordered_equivalences_hold(s.harray, s.triple)) ++bad;
  }
  report(5, "boundary-restricted biconditionals on 2000 bordered arrays",
         bad == 0, std::to_string(bad) + " failures");
}

void criterion6_condition_translation() {
  Rng rng(1006);
  int done = 0, bad = 0;
  while (done < 500) {
    const BorderedSample s = random_bordered_harray(rng, 4, 4);
    HArray hive_found = s.harray;
    bool got = false;
    enumerate_hives(s.triple, [&](const HArray& h) {
      hive_found = h;
      return !(got = true);
    });
    if (!got) continue;
    const int n = hive_found.rank();
    for (int b = 2; b < n && done < 500; ++b)
      for (int a = 1; a < b && done < 500; ++a)
        for (Int d : {Int{-1}, Int{1}}) {
          if (done >= 500) break;
          HArray p = hive_found;
          p.set(a, b, p.at(a, b) + d);
          if (!condition_columns_agree(condition_flags(p, s.triple))) ++bad;
          ++done;
        }
  }
  report(6, "condition translation under 500 minimal perturbations", bad == 0,
         std::to_string(bad) + " mismatches");
}

void criterion7_semigroup() {
  // pool of genuine hives over assorted boundaries
  std::vector<HArray> pool;
  for (const DominantWeight& mu : partitions_up_to(3, 2))
    for (const DominantWeight& nu : partitions_up_to(3, 2))
      for (const DominantWeight& lambda : partitions_of(mu.total() + nu.total(), 3))
        enumerate_hives(LRTriple(mu, nu, lambda), [&](const HArray& h) {
          pool.push_back(h);
          return true;
        });
  Rng rng(1007);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int bad = 0;
  for (int k = 0; k < 1000; ++k) {
    const HArray& x = pool[pick(rng)];
    const HArray& yy = pool[pick(rng)];
    HArray sum = HArray::zero(3);
    for (int b = 0; b <= 3; ++b)
      for (int a = 0; a <= b; ++a) sum.set(a, b, x.at(a, b) + yy.at(a, b));
    if (!is_hive(sum)) ++bad;
    // GT patterns: closure under entrywise addition
    TArray u = derived_t1(x), v = derived_t2(yy);
    if (is_gt_pattern(u) && is_gt_pattern(v)) {
      TArray w = TArray::zero(3);
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= i; ++j) w.set(i, j, u.at(i, j) + v.at(i, j));
      if (!is_gt_pattern(w)) ++bad;
    }
  }
  report(7, "semigroup closure for 1000 random sums", bad == 0,
         std::to_string(bad) + " failures");
}

void criterion8_oracle_self_consistency() {
  int bad = 0;
  for (const DominantWeight& lambda : partitions_up_to(3, 4)) {
    const SchurPoly p = schur(lambda);
    // all compositions of |lambda| into 3 parts, present in p or not
    const Int total = lambda.total();
    for (Int a = 0; a <= total; ++a)
      for (Int b = 0; a + b <= total; ++b) {
        const std::vector<Int> alpha{a, b, total - a - b};
        if (p.coefficient(alpha) != kostka_by_tableaux(lambda, alpha)) ++bad;
      }
  }
  // decomposition recovers random non-negative combinations
  Rng rng(1008);
  const std::vector<DominantWeight> ws = partitions_of(5, 3);
  for (int k = 0; k < 20; ++k) {
    std::map<std::vector<Int>, long long> coeffs;
    SchurPoly::TermMap merged;
    for (const DominantWeight& w : ws) {
      const long long c = std::uniform_int_distribution<long long>(0, 4)(rng);
      if (c == 0) continue;
      coeffs[w.parts()] = c;
      const SchurPoly sw = schur(w);
      for (const auto& [e, v] : sw.terms()) merged[e] += v * c;
    }
    if (schur_decompose(SchurPoly(3, merged)) != coeffs) ++bad;
  }
  report(8, "oracle self-consistency (Kostka cross-check, decomposition)",
         bad == 0, std::to_string(bad) + " mismatches");
}

}  // namespace

int main() {
  criterion1_golden_example();
  criteria23_exhaustive_sweep();
  criterion4_random_arrays();
  criterion5_bordered_arrays();
  criterion6_condition_translation();
  criterion7_semigroup();
  criterion8_oracle_self_consistency();
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
