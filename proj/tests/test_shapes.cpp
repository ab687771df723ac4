#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <tuple>

#include "ribbon/shapes.hpp"

using namespace ribbon;

TEST_CASE("grassmannian permutations") {
  CHECK(grassmannian_perm(Partition({3, 2, 0}), GrassSetting(7, 3)).str() == "1462357");
  CHECK(grassmannian_perm(Partition({0, 0}), GrassSetting(5, 2)) == Permutation::identity(5));
  CHECK(grassmannian_perm(Partition({2, 0}), GrassSetting(5, 2)).str() == "14235");
  CHECK_THROWS_AS(grassmannian_perm(Partition({4, 0}), GrassSetting(5, 2)), domain_error);
}

TEST_CASE("length of w_lambda is |lambda|, blocks increasing") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      GrassSetting s(n, k);
      for (const auto& lam : partitions_in(s)) {
        Permutation w = grassmannian_perm(lam, s);
        CHECK(w.length() == lam.size());
        for (int i = 1; i < n; ++i)
          if (i != k) CHECK(w(i) < w(i + 1));
      }
    }
}

TEST_CASE("parabolic decomposition") {
  GrassSetting s(7, 3);
  auto d = parabolic_decompose(Permutation::parse("4165273"), s);
  CHECK(d.lambda == Partition({3, 2, 0}));
  CHECK(d.v.str() == "2136475");
  auto e = parabolic_decompose(Permutation::identity(7), s);
  CHECK(e.lambda == Partition({0, 0, 0}));
  CHECK(e.v == Permutation::identity(7));
}

TEST_CASE("parabolic decomposition recomposes, lengths add") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      GrassSetting s(n, k);
      for (const auto& w : all_permutations(n)) {
        auto [lam, v] = parabolic_decompose(w, s);
        CHECK(grassmannian_perm(lam, s) * v == w);
        CHECK(w.length() == lam.size() + v.length());
        for (int i = 1; i <= k; ++i) CHECK(v(i) <= k);
      }
    }
}

TEST_CASE("ribbons with head in row 2 of (3,1,0) in Gr(3,7)") {
  GrassSetting s(7, 3);
  std::set<std::tuple<std::vector<int>, int, int, int>> got;
  for (const auto& r : ribbons_with_head_in_row(Partition({3, 1, 0}), 2, s))
    got.insert({r.outer.parts(), r.ht, r.wd, r.head_value});
  std::set<std::tuple<std::vector<int>, int, int, int>> want{
      {{3, 2, 0}, 1, 1, 4}, {{3, 3, 0}, 1, 2, 5}, {{3, 2, 2}, 2, 2, 4}, {{3, 3, 2}, 2, 3, 5}};
  CHECK(got == want);
}

TEST_CASE("no ribbons fit on the full rectangle") {
  GrassSetting s(6, 3);
  for (int i = 1; i <= 3; ++i) {
    CHECK(ribbons_with_head_in_row(full_partition(s), i, s).empty());
    CHECK(ribbons_with_tail_in_row(full_partition(s), i, s).empty());
  }
  CHECK(removable_ribbons(empty_partition(s), s).empty());
}

TEST_CASE("ribbons with head in row 1 of (2,0) in Gr(2,5)") {
  // A one-box ribbon to (3,0), and a two-row ribbon to (3,3) that wraps
  // under the first row.
  GrassSetting s(5, 2);
  auto rs = ribbons_with_head_in_row(Partition({2, 0}), 1, s);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].outer == Partition({3, 0}));
  CHECK(rs[0].ht == 1);
  CHECK(rs[0].wd == 1);
  CHECK(rs[1].outer == Partition({3, 3}));
  CHECK(rs[1].ht == 2);
  CHECK(rs[1].wd == 3);
  CHECK(ribbon_between(Partition({2, 0}), Partition({3, 3}), 2).has_value());
  CHECK_FALSE(ribbon_between(Partition({2, 0}), Partition({3, 1}), 2).has_value());
}

TEST_CASE("addable and removable ribbons agree with a box-level filter") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      GrassSetting s(n, k);
      auto parts = partitions_in(s);
      for (const auto& lam : parts) {
        std::set<std::vector<int>> fast, slow, rem;
        for (const auto& r : addable_ribbons(lam, s)) {
          fast.insert(r.outer.parts());
          CHECK(r.outer.size() - lam.size() == r.ht + r.wd - 1);
          CHECK(r.ht >= 1);
          CHECK(r.wd >= 1);
          auto check = ribbon_between(lam, r.outer, k);
          REQUIRE(check.has_value());
          CHECK(check->head_row == r.head_row);
          CHECK(check->tail_row == r.tail_row);
          CHECK(check->wd == r.wd);
        }
        for (const auto& mu : parts)
          if (ribbon_between(lam, mu, k)) slow.insert(mu.parts());
        CHECK(fast == slow);
        for (const auto& mu : parts)
          for (const auto& r : removable_ribbons(mu, s))
            if (r.inner == lam) rem.insert(mu.parts());
        CHECK(rem == slow);
      }
    }
}

TEST_CASE("a ribbon is determined by its tail and head values") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k) {
      GrassSetting s(n, k);
      for (const auto& lam : partitions_in(s)) {
        std::set<std::pair<int, int>> seen;
        for (const auto& r : addable_ribbons(lam, s)) {
          CHECK(r.tail_value < r.head_value);
          CHECK(seen.insert({r.tail_value, r.head_value}).second);
        }
      }
    }
}

TEST_CASE("dual partitions") {
  GrassSetting s(5, 2);
  CHECK(dual_partition(Partition({0, 0}), s) == Partition({3, 3}));
  CHECK(dual_partition(Partition({2, 0}), s) == Partition({3, 1}));
  CHECK(dual_partition(Partition({3, 3}), s) == Partition({0, 0}));
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      GrassSetting g(n, k);
      for (const auto& lam : partitions_in(g)) CHECK(dual_partition(dual_partition(lam, g), g) == lam);
    }
}

TEST_CASE("vertical strips and their connected pieces") {
  CHECK(vertical_strip_check(Partition({1, 0}), Partition({2, 1})));
  CHECK(*connected_vertical_strips(Partition({1, 0}), Partition({2, 1})) == 2);
  CHECK(*connected_vertical_strips(Partition({1, 1}), Partition({2, 2})) == 1);
  CHECK(vertical_strip_check(Partition({2, 1}), Partition({2, 1})));
  CHECK(*connected_vertical_strips(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK_FALSE(vertical_strip_check(Partition({0, 0}), Partition({2, 0})));
  CHECK_FALSE(connected_vertical_strips(Partition({0, 0}), Partition({2, 0})).has_value());
  CHECK(*connected_vertical_strips(Partition({1, 1, 0}), Partition({2, 2, 1})) == 2);
}

TEST_CASE("partition validation and text form") {
  CHECK_THROWS_AS(Partition({1, 2}), domain_error);
  CHECK_THROWS_AS(Partition({-1}), domain_error);
  CHECK(Partition({3, 1, 0}).str() == "[3,1,0]");
  CHECK(Partition({3, 1, 0}).conjugate() == Partition({2, 1, 1}));
  CHECK(partitions_in(GrassSetting(5, 2)).size() == 10);
  CHECK(partitions_in(GrassSetting(4, 0)).size() == 1);
}

TEST_CASE("permutations: inversions, words, text form") {
  for (const auto& w : all_permutations(5)) {
    int inv = 0;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) inv += w(i) > w(j);
    CHECK(w.length() == inv);
    CHECK(static_cast<int>(w.reduced_word().size()) == inv);
    CHECK(Permutation::from_word(5, w.reduced_word()) == w);
    CHECK(w * w.inverse() == Permutation::identity(5));
  }
  CHECK(Permutation::longest(4).str() == "4321");
  std::vector<int> big{2, 1, 3, 4, 5, 6, 7, 8, 9, 10};
  CHECK(Permutation::from_oneline(big).str() == "2,1,3,4,5,6,7,8,9,10");
  CHECK(Permutation::parse("2,1,3,4,5,6,7,8,9,10") == Permutation::from_oneline(big));
  CHECK_THROWS_AS(Permutation::parse("1123"), domain_error);
}

TEST_CASE("column word spells w_lambda") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      GrassSetting s(n, k);
      for (const auto& lam : partitions_in(s))
        CHECK(Permutation::from_word(n, column_word(lam, s)) == grassmannian_perm(lam, s));
    }
}
