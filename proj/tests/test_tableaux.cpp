#include "doctest.h"

#include <set>

#include "lrhive/verification.hpp"
#include "golden.hpp"

using namespace lrhive;

namespace {

SkewTableau tiny_112_23_3() {
  // rows: 112 / 23 / 3
  return SkewTableau(Shape(DominantWeight({3, 2, 1}), DominantWeight::zero(3)),
                     ContentMatrix({{2, 0, 0}, {1, 1, 0}, {0, 1, 1}}));
}

SkewTableau empty_of(const DominantWeight& mu) {
  return SkewTableau(Shape(mu, mu), ContentMatrix::zero(mu.rank()));
}

}  // namespace

TEST_CASE("SkewTableau validates row lengths") {
  const LRTriple t = golden::triple();
  CHECK_THROWS_AS(SkewTableau(Shape(t.lambda, t.mu), ContentMatrix::zero(4)),
                  std::invalid_argument);
  CHECK_NOTHROW(golden::tableau());
  CHECK_THROWS_AS(ContentMatrix({{1, 0}, {0, -1}}), std::invalid_argument);
}

TEST_CASE("semistandard predicate") {
  CHECK(is_semistandard(golden::tableau()));
  CHECK(is_semistandard(empty_of(DominantWeight({2, 1, 0}))));
  // shape (1,1)/(0,0) with two 1s stacked: column repeats 1
  SkewTableau bad(Shape(DominantWeight({1, 1}), DominantWeight::zero(2)),
                  ContentMatrix({{1, 1}, {0, 0}}));
  CHECK_FALSE(is_semistandard(bad));
}

TEST_CASE("reading word and Yamanouchi") {
  CHECK(reverse_reading_word(golden::tableau()) ==
        std::vector<int>{2, 4, 4, 2, 3, 3, 3, 1, 2, 2, 2, 1, 1, 1, 1, 1, 1});
  CHECK(reverse_reading_word(empty_of(DominantWeight({1, 0}))).empty());
  SkewTableau single(Shape(DominantWeight({3, 0}), DominantWeight::zero(2)),
                     ContentMatrix({{2, 0}, {1, 0}}));
  CHECK(reverse_reading_word(single) == std::vector<int>{1, 1, 2});

  CHECK(is_yamanouchi_word({2, 4, 4, 2, 3, 3, 3, 1, 2, 2, 2, 1, 1, 1, 1, 1, 1}));
  CHECK(is_yamanouchi_word({}));
  CHECK_FALSE(is_yamanouchi_word({2}));

  CHECK(is_yamanouchi_symbolic(golden::tableau()));
  CHECK(is_yamanouchi_symbolic(empty_of(DominantWeight({2, 1, 0}))));
  // an entry 2 in row 1 violates the condition immediately
  SkewTableau two_in_row1(Shape(DominantWeight({1, 0}), DominantWeight::zero(2)),
                          ContentMatrix({{0, 0}, {1, 0}}));
  CHECK_FALSE(is_yamanouchi_symbolic(two_in_row1));
  CHECK(is_lr_tableau(golden::tableau()));
}

TEST_CASE("word and symbolic Yamanouchi agree on semistandard tableaux") {
  // every semistandard filling of small shapes, all contents
  for (const DominantWeight& shape : partitions_up_to(3, 3)) {
    for (const DominantWeight& alpha : partitions_of(shape.total(), 3)) {
      std::vector<std::vector<Int>> perm{alpha.parts()};
      std::sort(perm.front().begin(), perm.front().end());
      do {
        enumerate_ssyt(shape, perm.front(), [&](const SkewTableau& y) {
          CHECK(is_yamanouchi_word(reverse_reading_word(y)) ==
                is_yamanouchi_symbolic(y));
          return true;
        });
      } while (std::next_permutation(perm.front().begin(), perm.front().end()));
    }
  }
}

TEST_CASE("Yamanouchi tableaux have no entries below the diagonal") {
  const LRTriple t(DominantWeight({2, 1, 0}), DominantWeight({2, 1, 0}),
                   DominantWeight({3, 2, 1}));
  enumerate_lr(t, [](const SkewTableau& y) {
    for (int i = 1; i <= y.rank(); ++i)
      for (int j = 1; j < i; ++j) CHECK(y.matrix().at(i, j) == 0);
    return true;
  });
}

TEST_CASE("content_of") {
  CHECK(content_of(golden::tableau()) == std::vector<Int>{7, 5, 3, 2});
  CHECK(content_of(empty_of(DominantWeight({2, 0}))) == std::vector<Int>{0, 0});
  CHECK(content_of(companion(golden::tableau())) == std::vector<Int>{6, 4, 4, 3});
}

TEST_CASE("tableau_to_gt and gt_to_tableau") {
  // successive shapes of 112/23/3: entries <=1 give (2), <=2 give (3,1)
  CHECK(tableau_to_gt(tiny_112_23_3()) == TArray({{2}, {3, 1}, {3, 2, 1}}));
  CHECK(tableau_to_gt(empty_of(DominantWeight::zero(3))) == TArray::zero(3));
  CHECK(tableau_to_gt(companion(golden::tableau())) == golden::tyc());

  CHECK(gt_to_tableau(TArray({{2}, {3, 1}, {3, 2, 1}})) == tiny_112_23_3());
  CHECK(gt_to_tableau(golden::tyc()) == companion(golden::tableau()));
  CHECK_THROWS_AS(tableau_to_gt(golden::tableau()), std::domain_error);  // skew
  CHECK_THROWS_AS(gt_to_tableau(TArray({{1}, {0, 0}})), std::domain_error);
  CHECK_THROWS_AS(gt_to_tableau(TArray({{-1}, {0, -1}})), std::domain_error);
}

TEST_CASE("truncated GT fragment of the golden tableau") {
  TruncatedGT f = skew_to_truncated_gt(golden::tableau());
  REQUIRE(f.n == 4);
  REQUIRE(f.rows.size() == 5);
  CHECK(f.rows[0] == std::vector<Int>{5, 3, 1, 0});
  CHECK(f.rows[1] == std::vector<Int>{11, 4, 1, 0, 0});
  CHECK(f.rows[2] == std::vector<Int>{11, 7, 2, 1, 0, 0});
  CHECK(f.rows[3] == std::vector<Int>{11, 7, 5, 1, 0, 0, 0});
  CHECK(f.rows[4] == std::vector<Int>{11, 7, 5, 3, 0, 0, 0, 0});
  CHECK(truncated_gt_to_skew(f, golden::triple().mu) == golden::tableau());

  TruncatedGT bad = f;
  bad.rows[1][0] = 2;  // breaks interlacing against rows[0]
  CHECK_THROWS_AS(truncated_gt_to_skew(bad, golden::triple().mu), std::domain_error);
}

TEST_CASE("fragment round trip on enumerated tableaux") {
  int seen = 0;
  for (const DominantWeight& shape : partitions_up_to(3, 3)) {
    for (const DominantWeight& alpha : partitions_of(shape.total(), 3)) {
      enumerate_ssyt(shape, alpha.parts(), [&](const SkewTableau& y) {
        CHECK(truncated_gt_to_skew(skew_to_truncated_gt(y), y.shape().inner()) == y);
        ++seen;
        return true;
      });
    }
  }
  CHECK(seen > 30);
}

TEST_CASE("companion") {
  SkewTableau c = companion(golden::tableau());
  CHECK(c.shape().outer() == DominantWeight({7, 5, 3, 2}));
  CHECK(c.non_skew());
  // rows 1111112 / 22234 / 333 / 44
  CHECK(c.matrix().rows() == std::vector<std::vector<Int>>{{6, 0, 0, 0},
                                                           {1, 3, 0, 0},
                                                           {0, 1, 3, 0},
                                                           {0, 1, 0, 2}});
  CHECK(companion(empty_of(DominantWeight::zero(2))).matrix() == ContentMatrix::zero(2));
  // content not weakly decreasing: transpose row lengths not a partition
  SkewTableau lone_two(Shape(DominantWeight({1, 0}), DominantWeight::zero(2)),
                       ContentMatrix({{0, 0}, {1, 0}}));
  CHECK_THROWS_AS(companion(lone_two), std::domain_error);
  // involution where defined
  enumerate_lr(golden::triple(), [](const SkewTableau& y) {
    SkewTableau c2 = companion(companion(y));
    CHECK(c2.matrix() == y.matrix());
    return true;
  });
}

TEST_CASE("non-skew semistandard tableaux vanish above the diagonal") {
  for (const DominantWeight& shape : partitions_up_to(3, 2)) {
    for (const DominantWeight& alpha : partitions_of(shape.total(), 3)) {
      enumerate_ssyt(shape, alpha.parts(), [](const SkewTableau& y) {
        for (int i = 1; i <= y.rank(); ++i)
          for (int j = i + 1; j <= y.rank(); ++j) CHECK(y.matrix().at(i, j) == 0);
        // IC(2) of the pattern is semistandardness; IC(1) is free
        TArray t = tableau_to_gt(y);
        CHECK(check_ic1(t));
        CHECK(check_ic2(t));
        return true;
      });
    }
  }
}

TEST_CASE("kostka_by_tableaux basics") {
  CHECK(kostka_by_tableaux(DominantWeight({2, 1, 0}), {1, 1, 1}) == 2);
  CHECK(kostka_by_tableaux(DominantWeight({2, 1, 0}), {2, 1, 0}) == 1);
  CHECK(kostka_by_tableaux(DominantWeight({2, 1, 0}), {3, 0, 0}) == 0);
  CHECK(kostka_by_tableaux(DominantWeight({1, 1, 1}), {1, 1, 1}) == 1);
}
