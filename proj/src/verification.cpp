#include "lrhive/verification.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "lrhive/json_io.hpp"

namespace lrhive {

namespace {

Int draw(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

// Weakly decreasing length-n tails with entries in [0, cap], sum = total when
// total >= 0, any sum when total < 0.
void partition_tails(int slots, Int cap, Int total, std::vector<Int>& acc,
                     std::vector<DominantWeight>& out) {
  if (slots == 0) {
    if (total <= 0) out.push_back(DominantWeight(acc));
    return;
  }
  Int hi = cap;
  if (total >= 0) hi = std::min(hi, total);
  for (Int v = hi; v >= 0; --v) {
    if (total >= 0 && v * slots < total) break;  // cannot reach the sum
    acc.push_back(v);
    partition_tails(slots - 1, v, total >= 0 ? total - v : total, acc, out);
    acc.pop_back();
  }
}

}  // namespace

TArray random_tarray(Rng& rng, int n, Int lo, Int hi) {
  TArray t = TArray::zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) t.set(i, j, draw(rng, lo, hi));
  return t;
}

HArray random_harray(Rng& rng, int n, Int lo, Int hi) {
  HArray h = HArray::zero(n);
  for (int b = 1; b <= n; ++b)
    for (int a = 0; a <= b; ++a) h.set(a, b, draw(rng, lo, hi));
  return h;
}

std::vector<DominantWeight> partitions_up_to(int n, Int max_part) {
  std::vector<DominantWeight> out;
  std::vector<Int> acc;
  partition_tails(n, max_part, -1, acc, out);
  return out;
}

std::vector<DominantWeight> partitions_of(Int total, int n) {
  std::vector<DominantWeight> out;
  std::vector<Int> acc;
  partition_tails(n, total, total, acc, out);
  return out;
}

BorderedSample random_bordered_harray(Rng& rng, int n, Int max_part) {
  const std::vector<DominantWeight> small = partitions_up_to(n, max_part);
  const DominantWeight& mu = small[static_cast<std::size_t>(
      draw(rng, 0, static_cast<Int>(small.size()) - 1))];
  const DominantWeight& nu = small[static_cast<std::size_t>(
      draw(rng, 0, static_cast<Int>(small.size()) - 1))];
  const std::vector<DominantWeight> lambdas =
      partitions_of(mu.total() + nu.total(), n);
  const DominantWeight& lambda = lambdas[static_cast<std::size_t>(
      draw(rng, 0, static_cast<Int>(lambdas.size()) - 1))];
  LRTriple triple(mu, nu, lambda);
  BoundaryFrame frame = make_boundary_frame(triple.boundary());
  const Int span = lambda.total() + 2;
  for (auto [a, b] : frame.holes) frame.values.set(a, b, draw(rng, -span, span));
  return BorderedSample{std::move(triple), std::move(frame.values)};
}

bool ic_rhombus_equivalences_hold(const HArray& h) {
  const RhombusFlags rc = check_rc(h);
  const TArray t1 = derived_t1(h), t2 = derived_t2(h), t3 = derived_t3(h);
  return rc.rc1 == (check_ic2(t1) && check_ic1(t2)) &&
         rc.rc2 == (check_ic1(t1) && check_ic1(t3)) &&
         rc.rc3 == (check_ic2(t2) && check_ic2(t3)) &&
         check_ic1(t3) == check_ic1(t1) && check_ic2(t3) == check_ic2(t2);
}

bool hive_iff_derived_gt(const HArray& h) {
  return is_hive(h) == (is_gt_pattern(derived_t1(h)) && is_gt_pattern(derived_t2(h)));
}

bool fiber_identity_holds(const HArray& h) {
  auto [phi1, phi2] = fiber_coordinates(h);
  return phi1 == phi2;
}

bool dual_ic_swap_holds(const TArray& t) {
  const TArray d = dual_tarray(t);
  return check_ic1(t) == check_ic2(d) && check_ic2(t) == check_ic1(d);
}

bool exponent_bounds_hold(const TArray& t, const DominantWeight& bound) {
  const int n = t.rank();
  require_same_rank(n, bound.rank(), "exponent_bounds_hold");
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j)
      if (exponent(t, i, j) > bound[i] - bound[i + 1]) return false;
  return true;
}

bool bordered_equivalences_hold(const HArray& h, const LRTriple& t) {
  const TArray t1 = derived_t1(h), t2 = derived_t2(h);
  const DominantWeight nu_star = dual_weight(t.nu);
  const DominantWeight lambda_star = dual_weight(t.lambda);
  const int n = t.rank();
  std::vector<Int> w1(static_cast<std::size_t>(n)), w2(w1.size());
  for (int i = 1; i <= n; ++i) {
    w1[static_cast<std::size_t>(i - 1)] = nu_star[i] - lambda_star[i];
    w2[static_cast<std::size_t>(i - 1)] = t.lambda[i] - t.mu[i];
  }
  return weight_of(t1) == w1 && weight_of(t2) == w2 &&
         check_ic1(t1) == exponent_bounds_hold(t2, t.mu) &&
         check_ic2(t1) == check_ic1(t2) &&
         exponent_bounds_hold(dual_tarray(t1), nu_star) == check_ic2(t2);
}

ConditionFlags condition_flags(const HArray& h, const LRTriple& t) {
  const int n = t.rank();
  require_same_rank(h.rank(), n, "condition_flags");
  ConditionFlags f{};
  const RhombusFlags rc = check_rc(h);
  f.rc1 = rc.rc1, f.rc2 = rc.rc2, f.rc3 = rc.rc3;

  const TArray tz = derived_t1(h);
  const TArray s = dual_tarray(tz);
  f.ic1 = check_ic1(s);
  f.ic2 = check_ic2(s);
  f.exponents = exponent_bounds_hold(s, dual_weight(t.nu));

  // Candidate content matrix of the tableau-side object, rebuilt from the
  // truncated pattern whose upper-left block is forced by lambda.
  auto fragment = [&](int k, int j) -> Int {
    return j <= k ? t.lambda[j] : tz.at(n - k, j - k);
  };
  std::vector<std::vector<Int>> a(static_cast<std::size_t>(n),
                                  std::vector<Int>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          fragment(i, j) - fragment(i - 1, j);
  f.nonneg = true;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] < 0)
        f.nonneg = false;
  f.ss = semistandard_condition(t.mu, a);
  f.yam = yamanouchi_condition(a);
  return f;
}

bool condition_columns_agree(const ConditionFlags& f) {
  return f.rc1 == f.ic1 && f.ic1 == f.nonneg && f.rc2 == f.ic2 &&
         f.ic2 == f.ss && f.rc3 == f.exponents && f.exponents == f.yam;
}

ModelCounts model_counts(const LRTriple& t) {
  return ModelCounts{count(Model::lr, t), count(Model::hive, t),
                     count(Model::gz1, t), count(Model::gz2, t),
                     lr_coefficient_oracle(t)};
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  out << "triples=" << triples_checked << " objects=" << objects_checked
      << " arrays=" << arrays_checked << " failures=" << failures.size();
  return out.str();
}

namespace {

struct TaskResult {
  long long triples = 0;
  long long objects = 0;
  std::vector<std::string> failures;
};

void fail(TaskResult& r, const std::string& check, const LRTriple& t) {
  r.failures.push_back(check + " " + to_json(t).dump());
}

void check_triple(const LRTriple& t, TaskResult& r) {
  ++r.triples;
  if (!model_counts(t).agree()) fail(r, "model-agreement", t);
  const GZTriple g1 = gz1_of(t), g2 = gz2_of(t);
  enumerate_lr(t, [&](const SkewTableau& y) {
    ++r.objects;
    const TArray s1 = phi_lr_to_gz(y, t);
    if (!is_gz_scheme(s1, g1) || phi_gz_to_lr(s1, t) != y)
      fail(r, "phi-round-trip", t);
    const TArray s2 = psi_lr_to_gz2(y, t);
    if (!is_gz_scheme(s2, g2) || psi_gz2_to_lr(s2, t) != y)
      fail(r, "psi-round-trip", t);
    const HArray h = lr_to_hive(y, t);
    if (!is_hive(h) || lr_to_hive_direct(y, t) != h || hive_to_lr(h, t) != y)
      fail(r, "hive-round-trip", t);
    return r.failures.size() < 8;  // keep reports small
  });
}

}  // namespace

VerifyReport run_verification(const VerifySweepConfig& config) {
  const std::vector<DominantWeight> weights =
      partitions_up_to(config.n, config.max_part);
  const Int m = static_cast<Int>(weights.size());

  std::vector<std::pair<int, int>> pairs;
  if (config.exhaustive) {
    for (Int i = 0; i < m; ++i)
      for (Int j = 0; j < m; ++j)
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  } else {
    Rng rng(config.seed);
    for (int k = 0; k < config.samples; ++k)
      pairs.emplace_back(static_cast<int>(draw(rng, 0, m - 1)),
                         static_cast<int>(draw(rng, 0, m - 1)));
  }

  std::vector<TaskResult> results(pairs.size());
  const int threads = std::max(1, config.threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < pairs.size();) {
      const DominantWeight& mu = weights[static_cast<std::size_t>(pairs[k].first)];
      const DominantWeight& nu = weights[static_cast<std::size_t>(pairs[k].second)];
      for (const DominantWeight& lambda : partitions_of(mu.total() + nu.total(), config.n))
        check_triple(LRTriple(mu, nu, lambda), results[k]);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerifyReport report;
  for (const TaskResult& r : results) {
    report.triples_checked += r.triples;
    report.objects_checked += r.objects;
    for (const std::string& f : r.failures)
      if (report.failures.size() < 32) report.failures.push_back(f);
  }

  // Random-array batteries, deterministic in the seed.
  Rng rng(config.seed + 0x9e3779b97f4a7c15ULL);
  for (int k = 0; k < config.random_arrays; ++k) {
    const HArray h = random_harray(rng, config.n, -5, 5);
    if (!ic_rhombus_equivalences_hold(h))
      report.failures.push_back("ic-rhombus " + to_json(h).dump());
    if (!hive_iff_derived_gt(h))
      report.failures.push_back("hive-iff-gt " + to_json(h).dump());
    if (!fiber_identity_holds(h))
      report.failures.push_back("fiber-identity " + to_json(h).dump());
    if (!dual_ic_swap_holds(random_tarray(rng, config.n, -5, 5)))
      report.failures.push_back("dual-ic-swap (tarray)");
    const BorderedSample sample = random_bordered_harray(rng, config.n, config.max_part);
    if (!bordered_equivalences_hold(sample.harray, sample.triple))
      report.failures.push_back("bordered-equivalences " + to_json(sample.harray).dump());
    report.arrays_checked += 3;
  }
  return report;
}

}  // namespace lrhive
