#include "doctest.h"

#include <set>

#include "lrhive/verification.hpp"
#include "golden.hpp"

using namespace lrhive;

TEST_CASE("phi on the golden example") {
  const LRTriple t = golden::triple();
  TArray s = phi_lr_to_gz(golden::tableau(), t);
  CHECK(s == golden::tz_dual());
  CHECK(is_gz_scheme(s, gz1_of(t)));
  CHECK(phi_gz_to_lr(s, t) == golden::tableau());
}

TEST_CASE("psi on the golden example") {
  const LRTriple t = golden::triple();
  TArray s = psi_lr_to_gz2(golden::tableau(), t);
  CHECK(s == golden::tyc());
  CHECK(is_gz_scheme(s, gz2_of(t)));
  CHECK(psi_gz2_to_lr(s, t) == golden::tableau());
}

TEST_CASE("hive maps on the golden example") {
  const LRTriple t = golden::triple();
  HArray h = lr_to_hive(golden::tableau(), t);
  CHECK(h == golden::hive());
  CHECK(lr_to_hive_direct(golden::tableau(), t) == golden::hive());
  CHECK(hive_to_lr(h, t) == golden::tableau());
  auto [s1, s2] = hive_gz_maps(h);
  CHECK(s1 == golden::tz_dual());
  CHECK(s2 == golden::tyc());
  // the psi image reconstructs the same hive through the T2 direction
  CHECK(reconstruct_from_t2(t.boundary(), psi_lr_to_gz2(golden::tableau(), t)) == h);
}

TEST_CASE("empty tableau maps to singleton families") {
  const DominantWeight mu({2, 1, 0});
  const LRTriple t(mu, DominantWeight::zero(3), mu);
  SkewTableau empty(Shape(mu, mu), ContentMatrix::zero(3));
  TArray s = phi_lr_to_gz(empty, t);
  CHECK(is_gz_scheme(s, gz1_of(t)));
  CHECK(phi_gz_to_lr(s, t) == empty);
  CHECK(psi_lr_to_gz2(empty, t) == TArray::zero(3));
  HArray h = lr_to_hive(empty, t);
  CHECK(is_hive(h));
  CHECK(hive_to_lr(h, t) == empty);
  CHECK(count(Model::lr, t) == 1);
}

TEST_CASE("precondition violations are rejected") {
  const LRTriple t = golden::triple();
  const LRTriple other(DominantWeight({2, 1, 0}), DominantWeight({2, 1, 0}),
                       DominantWeight({3, 2, 1}));
  CHECK_THROWS_AS(phi_lr_to_gz(golden::tableau(), other), std::domain_error);
  CHECK_THROWS_AS(phi_gz_to_lr(golden::tyc(), t), std::domain_error);
  CHECK_THROWS_AS(psi_gz2_to_lr(golden::tz_dual(), t), std::domain_error);
  HArray not_hive = golden::hive();
  not_hive.set(1, 2, 13);
  CHECK_THROWS_AS(hive_to_lr(not_hive, t), std::domain_error);
  CHECK_THROWS_AS(hive_gz_maps(not_hive), std::domain_error);
  // semistandard but non-Yamanouchi input is outside phi's domain
  SkewTableau non_yam(Shape(DominantWeight({2, 1}), DominantWeight({1, 0})),
                      ContentMatrix({{0, 1}, {1, 0}}));
  CHECK(is_semistandard(non_yam));
  CHECK_FALSE(is_yamanouchi_symbolic(non_yam));
  const LRTriple nt(DominantWeight({1, 0}), DominantWeight({1, 1}),
                    DominantWeight({2, 1}));
  CHECK_THROWS_AS(phi_lr_to_gz(non_yam, nt), std::domain_error);
}

TEST_CASE("phi and psi are bijections on LR((4,2,1)/(2,1,0),(2,1,1))") {
  const LRTriple t(DominantWeight({2, 1, 0}), DominantWeight({2, 1, 1}),
                   DominantWeight({4, 2, 1}));
  std::set<TArray> phi_images, psi_images;
  long long n_lr = 0;
  enumerate_lr(t, [&](const SkewTableau& y) {
    ++n_lr;
    TArray s1 = phi_lr_to_gz(y, t);
    CHECK(phi_gz_to_lr(s1, t) == y);
    phi_images.insert(s1);
    TArray s2 = psi_lr_to_gz2(y, t);
    CHECK(psi_gz2_to_lr(s2, t) == y);
    psi_images.insert(s2);
    return true;
  });
  CHECK(n_lr > 0);
  CHECK(static_cast<long long>(phi_images.size()) == n_lr);
  CHECK(static_cast<long long>(psi_images.size()) == n_lr);
  // images are exactly the two GZ families
  std::set<TArray> gz1_all, gz2_all;
  enumerate_gz(gz1_of(t), [&](const TArray& s) { gz1_all.insert(s); return true; });
  enumerate_gz(gz2_of(t), [&](const TArray& s) { gz2_all.insert(s); return true; });
  CHECK(phi_images == gz1_all);
  CHECK(psi_images == gz2_all);
}

TEST_CASE("hive round trips and direct formula on a sweep") {
  for (const DominantWeight& mu : partitions_up_to(3, 2)) {
    for (const DominantWeight& nu : partitions_up_to(3, 2)) {
      for (const DominantWeight& lambda : partitions_of(mu.total() + nu.total(), 3)) {
        const LRTriple t(mu, nu, lambda);
        enumerate_lr(t, [&](const SkewTableau& y) {
          HArray h = lr_to_hive(y, t);
          CHECK(is_hive(h));
          CHECK(lr_to_hive_direct(y, t) == h);
          CHECK(hive_to_lr(h, t) == y);
          auto [s1, s2] = hive_gz_maps(h);
          CHECK(is_gz_scheme(s1, gz1_of(t)));
          CHECK(is_gz_scheme(s2, gz2_of(t)));
          CHECK(reconstruct_from_t1(t.boundary(), dual_tarray(s1)) == h);
          CHECK(reconstruct_from_t2(t.boundary(), s2) == h);
          return true;
        });
      }
    }
  }
}

TEST_CASE("direct KTT count for the golden h_{1,2}") {
  // empty boxes in rows 1-2: 5 + 3; entries <= 1 there: 6 + 1
  CHECK(lr_to_hive_direct(golden::tableau(), golden::triple()).at(1, 2) == 15);
  // l = 0 counts only empty boxes: the mu prefix sums
  HArray h = lr_to_hive_direct(golden::tableau(), golden::triple());
  CHECK(h.at(0, 1) == 5);
  CHECK(h.at(0, 2) == 8);
  CHECK(h.at(0, 4) == 9);
}
