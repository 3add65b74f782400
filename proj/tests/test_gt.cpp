#include "doctest.h"

#include "lrhive/verification.hpp"
#include "golden.hpp"

using namespace lrhive;

TEST_CASE("interlacing predicates") {
  CHECK(check_ic1(golden::tz()));
  CHECK(check_ic2(golden::tz()));
  CHECK(is_gt_pattern(golden::tz()));
  CHECK_FALSE(check_ic1(TArray({{1}, {0, 0}})));
  CHECK(check_ic2(TArray({{1}, {0, 0}})));
  // tableau 112/23/3, successive shapes bottom-up
  CHECK(is_gt_pattern(TArray({{2}, {3, 1}, {3, 2, 1}})));
  CHECK(is_gt_pattern(TArray({{5}, {5, 5}, {5, 5, 5}})));
  CHECK(is_gt_pattern(golden::tyc()));
}

TEST_CASE("duality swaps the interlacing conditions") {
  Rng rng(11);
  for (int k = 0; k < 1000; ++k)
    CHECK(dual_ic_swap_holds(random_tarray(rng, 4, -5, 5)));
}

TEST_CASE("exponent values and range") {
  const TArray s = golden::tz_dual();
  CHECK(exponent(s, 1, 1) == 0);
  CHECK(exponent(s, 2, 2) == 2);
  CHECK_THROWS_AS(exponent(s, 4, 1), std::out_of_range);  // needs i <= n-1
  CHECK_THROWS_AS(exponent(s, 2, 3), std::out_of_range);  // needs j <= i
  CHECK_THROWS_AS(exponent(s, 0, 0), std::out_of_range);
  const TArray c({{5}, {5, 5}, {5, 5, 5}});
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= i; ++j) CHECK(exponent(c, i, j) == 0);
}

TEST_CASE("exponent is linear in the array") {
  Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    TArray a = random_tarray(rng, 4, -5, 5), b = random_tarray(rng, 4, -5, 5);
    TArray sum = TArray::zero(4);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= i; ++j) sum.set(i, j, a.at(i, j) + b.at(i, j));
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= i; ++j)
        CHECK(exponent(sum, i, j) == exponent(a, i, j) + exponent(b, i, j));
  }
}

TEST_CASE("GZ scheme membership") {
  const LRTriple t = golden::triple();
  CHECK(is_gz_scheme(golden::tz_dual(), gz1_of(t)));
  CHECK(is_gz_scheme(golden::tyc(), gz2_of(t)));
  CHECK(is_gz_scheme(TArray::zero(3),
                     GZTriple(DominantWeight::zero(3), std::vector<Int>(3, 0),
                              DominantWeight::zero(3))));
  // wrong weight
  GZTriple wrong(dual_weight(t.mu), std::vector<Int>{0, 0, 0, 0}, dual_weight(t.nu));
  CHECK_FALSE(is_gz_scheme(golden::tz_dual(), wrong));
  CHECK_THROWS_AS(is_gz_scheme(TArray::zero(3), gz1_of(t)), std::invalid_argument);
}

TEST_CASE("enumerated schemes satisfy the predicate") {
  const LRTriple t(DominantWeight({2, 1, 0}), DominantWeight({2, 1, 0}),
                   DominantWeight({3, 2, 1}));
  for (const GZTriple& spec : {gz1_of(t), gz2_of(t)}) {
    int seen = 0;
    enumerate_gz(spec, [&](const TArray& s) {
      CHECK(is_gz_scheme(s, spec));
      ++seen;
      return true;
    });
    CHECK(seen == count(Model::gz1, t));
  }
}
