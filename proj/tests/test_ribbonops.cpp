#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbon/ribbonops.hpp"
#include "ribbon/verify.hpp"

using namespace ribbon;

namespace {

GrassVector vec(VarUniverse u, std::initializer_list<std::pair<std::vector<int>, const char*>> terms) {
  GrassVector v;
  for (const auto& [parts, c] : terms) accumulate(v, Partition(parts), MultiPoly::parse(u, c));
  return v;
}

void require_all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) {
    INFO(r.name << " " << r.setting << (r.counterexamples.empty() ? "" : " " + r.counterexamples.front()));
    CHECK(r.ok());
  }
}

}  // namespace

TEST_CASE("head-valued operator in row 2 of (3,1,0), Gr(3,7)") {
  GrassSetting s(7, 3);
  VarUniverse u{7};
  OpContext ctx = OpContext::symbolic(s);
  GrassVector want = vec(u, {{{3, 1, 0}, "t3"},
                             {{3, 2, 0}, "hbar - (p-q)*t4"},
                             {{3, 3, 0}, "(hbar - (p-q)*t5)*q"},
                             {{3, 2, 2}, "(hbar - (p-q)*t4)*p*q"},
                             {{3, 3, 2}, "(hbar - (p-q)*t5)*p*q^2"}});
  CHECK(apply_op(ctx, op::fhead, 2, basis_vector(Partition({3, 1, 0}), u)) == want);
}

TEST_CASE("tail-valued head-anchored operator, same input") {
  GrassSetting s(7, 3);
  VarUniverse u{7};
  OpContext ctx = OpContext::symbolic(s);
  GrassVector want = vec(u, {{{3, 1, 0}, "t3"},
                             {{3, 2, 0}, "hbar - (p-q)*t3"},
                             {{3, 3, 0}, "(hbar - (p-q)*t3)*q"},
                             {{3, 2, 2}, "(hbar - (p-q)*t1)*p*q"},
                             {{3, 3, 2}, "(hbar - (p-q)*t1)*p*q^2"}});
  CHECK(apply_op(ctx, op::xfhead, 2, basis_vector(Partition({3, 1, 0}), u)) == want);
}

TEST_CASE("adding operators on the full rectangle only scale") {
  GrassSetting s(5, 2);
  VarUniverse u{5};
  OpContext ctx = OpContext::symbolic(s);
  Partition full = full_partition(s);
  for (auto k : {op::fhead, op::xfhead, op::xftail, op::ftail})
    for (int i = 1; i <= 2; ++i) {
      GrassVector v = apply_op(ctx, k, i, basis_vector(full, u));
      REQUIRE(v.size() == 1);
      CHECK(v.begin()->first == full);
      CHECK(v.begin()->second == MultiPoly::var(u, u.t(full[i] + s.k + 1 - i)));
    }
}

TEST_CASE("intro motivic Chern expansion") {
  GrassSetting s(5, 2);
  VarUniverse u{5};
  GrassVector want = vec(u, {{{2, 0}, "t1*t4"},
                             {{2, 1}, "(1+y)*(1-t2)*t4"},
                             {{2, 2}, "-y*(1+y)*(1-t3)*t4"},
                             {{3, 0}, "(1+y)*t1*(1-t5)"},
                             {{3, 1}, "(1+y)^2*(1-t2)*(1-t5)"},
                             {{3, 2}, "-y*(1+y)^2*(1-t3)*(1-t5)"},
                             {{3, 3}, "y^2*(1+y)^2*(1-t4)*(1-t5) + y^2*(1+y)*t4*(1-t5)"}});
  CHECK(pieri(ClassKind::MotivicChern, Partition({2, 0}), 2, s) == want);
  CHECK(pieri_specialized(ClassKind::MotivicChern, Partition({2, 0}), 2, s) == want);
}

TEST_CASE("Segre motivic expansion in Gr(3,5)") {
  GrassSetting s(5, 3);
  VarUniverse u{5};
  GrassVector want = vec(u, {{{1, 1, 0}, "t1*t3 + t1*t4 + t3*t4"},
                             {{2, 1, 0}, "(1+y)*(t1+t3)*(1-t4)"},
                             {{1, 1, 1}, "(1+y)*(t3+t4)*(1-t1)"},
                             {{2, 1, 1}, "(1+y)^2*(1-t1)*(1-t4)"},
                             {{2, 2, 0}, "(1+y)^2*(1-t3)*(1-t4) + (1+y)*(1-t3)*(t1+t4)"},
                             {{2, 2, 1}, "(1+y)^2*(1-t1)*(1-t3)"},
                             {{2, 2, 2}, "-y*(1+y)*(1-t1)*(t3+t4) - y*(1+y)^2*(1-t1)*(1-t4) - y*(1+y)^2*(1-t1)*(1-t3)"}});
  CHECK(pieri(ClassKind::SegreMotivic, Partition({1, 1, 0}), 2, s) == want);
}

TEST_CASE("r = 0 is the identity, r out of range is rejected") {
  GrassSetting s(5, 2);
  VarUniverse u{5};
  for (const auto& e : class_kinds())
    for (const auto& lam : partitions_in(s)) CHECK(pieri(e.kind, lam, 0, s) == basis_vector(lam, u));
  CHECK_THROWS_AS(pieri(ClassKind::MotivicChern, Partition({0, 0}), 3, s), domain_error);
  CHECK_THROWS_AS(pieri(ClassKind::MotivicChern, Partition({4, 0}), 1, s), domain_error);
}

TEST_CASE("class kinds carry their parameters") {
  CHECK(class_kinds().size() == 8);
  CHECK(parse_class_kind("MC") == ClassKind::MotivicChern);
  CHECK(parse_class_kind("omega") == ClassKind::DualizingSheaf);
  CHECK_FALSE(parse_class_kind("mc").has_value());
  CHECK(info(ClassKind::DualizingSheaf).t_zero);
  CHECK(info(ClassKind::SegreMotivic).segre);
}

TEST_CASE("opposite cells") {
  GrassSetting s(4, 2);
  VarUniverse u{4};
  Partition full = full_partition(s);
  for (int r = 0; r <= 2; ++r) {
    GrassVector direct = pieri_opposite_direct(ClassKind::MotivicChern, Partition({0, 0}), r, s);
    GrassVector top = pieri(ClassKind::MotivicChern, full, r, s);
    CHECK(direct == GrassVector{{Partition({0, 0}), weyl_twist(top.at(full))}});
  }
  for (const auto& lam : partitions_in(s))
    CHECK(pieri_opposite_direct(ClassKind::MotivicChern, lam, 1, s) ==
          pieri_opposite_twisted(ClassKind::MotivicChern, lam, 1, s));
  (void)u;
}

TEST_CASE("refined operators") {
  GrassSetting s(5, 2);
  VarUniverse u{5};
  OpContext ctx = OpContext::symbolic(s);
  GrassVector b = basis_vector(Partition({2, 0}), u);
  // Row values of (2,0) are {1, 4}.
  CHECK(refined_op(ctx, 2, 2, b).empty());
  CHECK(refined_op(ctx, 4, 4, b) == scale(b, MultiPoly::var(u, u.t(4))));
  CHECK_THROWS_AS(refined_op(ctx, 3, 2, b), domain_error);
  for (int i = 1; i <= 2; ++i) CHECK(regroup_row(ctx, Partition({2, 0}), i, false) == apply_op(ctx, op::fhead, i, b));
}

TEST_CASE("dualizing-sheaf rule") {
  GrassSetting s(5, 2);
  VarUniverse u{5};
  for (const auto& lam : partitions_in(s)) {
    CHECK(omega_pieri(lam, 0, s) == basis_vector(lam, u));
    for (int r = 0; r <= 2; ++r) CHECK(omega_pieri(lam, r, s) == pieri(ClassKind::DualizingSheaf, lam, r, s));
  }
}

TEST_CASE("engine agrees with the representation oracle") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {5, 2}}) {
    Comparator cmp(false);
    CheckResult r = check_pieri_oracle(GrassSetting(n, k), cmp);
    INFO(r.setting << (r.counterexamples.empty() ? "" : " " + r.counterexamples.front()));
    CHECK(r.ok());
  }
}

TEST_CASE("summed operator equalities and the refined-operator claims") {
  for (const auto& s : settings_upto(5, 3)) {
    Comparator cmp(false);
    require_all_pass(check_appendix(s, cmp));
  }
}

TEST_CASE("a single head operator differs from the tail one") {
  // The four equalities hold only after summing over index sets.
  GrassSetting s(4, 2);
  VarUniverse u{4};
  OpContext ctx = OpContext::symbolic(s);
  int differs = 0;
  for (const auto& lam : partitions_in(s))
    for (int i = 1; i <= 2; ++i)
      differs += apply_op(ctx, op::fhead, i, basis_vector(lam, u)) != apply_op(ctx, op::xftail, i, basis_vector(lam, u));
  CHECK(differs > 0);
}

TEST_CASE("intertwining factor, every ribbon up to n = 7") {
  for (const auto& s : settings_upto(7)) {
    Comparator cmp(false);
    require_all_pass(check_intertwining(s, cmp));
  }
}

TEST_CASE("specialization ladder up to n = 5") {
  for (const auto& s : settings_upto(5, 3)) {
    Comparator cmp(false);
    auto rs = check_specializations(s, cmp);
    rs.push_back(check_grothendieck_pieri(s, cmp));
    require_all_pass(rs);
  }
}
