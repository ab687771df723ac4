#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbon/hecke.hpp"
#include "ribbon/verify.hpp"

using namespace ribbon;

namespace {

HeckeParams rational_params(VarUniverse u, int p, int q, Rational h) {
  return {MultiPoly::constant(u, p), MultiPoly::constant(u, q), MultiPoly::constant(u, h)};
}

HeckeElement tbar(const Permutation& w) { return HeckeElement::basis_element(w, Basis::Tbar); }

void require_all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs) {
    INFO(r.name << " " << r.setting << (r.counterexamples.empty() ? "" : " " + r.counterexamples.front()));
    CHECK(r.ok());
  }
}

}  // namespace

TEST_CASE("quadratic relation and the unit") {
  HeckeAlgebra H = HeckeAlgebra::symbolic(3);
  VarUniverse u{3};
  const auto& P = H.params();
  for (int i = 1; i <= 2; ++i) {
    HeckeElement g = tbar(Permutation::simple(3, i));
    HeckeElement want = P.p_minus_q() * g + HeckeElement::poly(3, P.pq());
    CHECK(H.gen_times(i, g) == want);
    CHECK(H.gen_times(i, HeckeElement::one(3, Basis::Tbar)) == g);
    // T basis: T_i T_i = -(p-q) T_i + pq.
    HeckeElement t = HeckeElement::basis_element(Permutation::simple(3, i), Basis::T);
    CHECK(H.gen_times(i, t) == -P.p_minus_q() * t + HeckeElement::poly(3, P.pq(), Basis::T));
  }
  (void)u;
}

TEST_CASE("braid relation in rank 3") {
  HeckeAlgebra H = HeckeAlgebra::symbolic(3);
  HeckeElement one = HeckeElement::one(3, Basis::Tbar);
  CHECK(H.word_times({1, 2, 1}, one) == H.word_times({2, 1, 2}, one));
}

TEST_CASE("normal ordering moves x to the left") {
  HeckeAlgebra H = HeckeAlgebra::symbolic(2);
  VarUniverse u{2};
  HeckeElement g = tbar(Permutation::simple(2, 1));
  HeckeElement want = MultiPoly::parse(u, "x2") * g + HeckeElement::poly(2, MultiPoly::parse(u, "hbar - (p-q)*x2"));
  CHECK(H.times_x(g, 1) == want);
  CHECK(H.times_x(HeckeElement::one(2, Basis::Tbar), 2) == HeckeElement::poly(2, MultiPoly::parse(u, "x2")));
  // T basis uses x_i in the correction term.
  HeckeElement t = HeckeElement::basis_element(Permutation::simple(2, 1), Basis::T);
  HeckeElement want_t =
      MultiPoly::parse(u, "x2") * t + HeckeElement::poly(2, MultiPoly::parse(u, "hbar - (p-q)*x1"), Basis::T);
  CHECK(H.times_x(t, 1) == want_t);
}

TEST_CASE("Tbar_w x1 x2 does not depend on the reduced word") {
  HeckeAlgebra H = HeckeAlgebra::symbolic(3);
  VarUniverse u{3};
  HeckeElement f = HeckeElement::poly(3, MultiPoly::parse(u, "x1*x2"));
  HeckeElement a = H.word_times({1, 2, 1}, f), b = H.word_times({2, 1, 2}, f);
  CHECK(a == b);
  CHECK(H.basis_times(Permutation::longest(3), f) == a);
}

TEST_CASE("relation suites, symbolic, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    Comparator cmp(false);
    auto rs = check_hecke_relations(n, 1, cmp);
    rs.push_back(check_ribbon_word_identity(n, cmp));
    for (const auto& r : rs) {
      INFO(r.name << " " << r.setting);
      CHECK(r.ok());
    }
  }
}

TEST_CASE("symmetrizer absorbs parabolic generators") {
  GrassSetting s(4, 2);
  HeckeAlgebra H(4, rational_params(VarUniverse{4}, 2, 3, Rational(5, 7)));
  HeckeElement sig = sigma(H, s);
  for (int i : {1, 3}) {
    CHECK(H.gen_times(i, sig) == H.params().p * sig);
    CHECK(H.mul(sig, tbar(Permutation::simple(4, i))) == H.params().p * sig);
  }
  // Cleared mode, fully symbolic.
  HeckeAlgebra S = HeckeAlgebra::symbolic(4);
  HeckeElement c = sigma_cleared(S, s);
  for (int i : {1, 3}) CHECK(S.gen_times(i, c) == S.params().p * c);
}

TEST_CASE("trivial symmetrizers") {
  HeckeAlgebra H(2, rational_params(VarUniverse{2}, 2, 3, Rational(1)));
  CHECK(sigma(H, GrassSetting(2, 1)) == HeckeElement::one(2, Basis::Tbar));
  HeckeAlgebra H3(3, rational_params(VarUniverse{3}, 2, 3, Rational(1)));
  // k = 0: one block S_n; the empty Grassmannian class is Sigma itself.
  HeckeElement s0 = sigma(H3, GrassSetting(3, 0));
  CHECK(t_lambda(H3, GrassSetting(3, 0), Partition(std::vector<int>{}), s0) == s0);
}

TEST_CASE("coefficient identity at (p,q) = (2,3) in Gr(2,4)") {
  VarUniverse u{4};
  HeckeAlgebra H(4, rational_params(u, 2, 3, Rational(1)));
  GrassSetting s(4, 2);
  MultiPoly total(u);
  for (const auto& v : parabolic_subgroup(s))
    total += MultiPoly::constant(u, 3).pow(parabolic_d(s) - v.length()) * MultiPoly::constant(u, 2).pow(v.length());
  CHECK(total == sigma_normalizer(H, s));
  CHECK(total == MultiPoly::constant(u, 25));
}

TEST_CASE("degenerate parameters are rejected") {
  VarUniverse u{4};
  GrassSetting s(4, 2);
  CHECK_THROWS_AS(sigma(HeckeAlgebra(4, rational_params(u, 2, 2, Rational(1))), s), precondition_error);
  CHECK_THROWS_AS(sigma(HeckeAlgebra(4, rational_params(u, 2, 0, Rational(1))), s), precondition_error);
  // [2] = p + q = 0.
  CHECK_THROWS_AS(sigma(HeckeAlgebra(4, rational_params(u, 1, -1, Rational(1))), s), precondition_error);
  CHECK_THROWS_AS(sigma(HeckeAlgebra::symbolic(4), s), precondition_error);
}

TEST_CASE("Grassmannian Hecke operators") {
  VarUniverse u{4};
  GrassSetting s(4, 2);
  HeckeAlgebra H(4, rational_params(u, 3, 5, Rational(-2, 3)));
  HeckeElement sig = sigma(H, s);
  CHECK(t_lambda(H, s, Partition({0, 0}), sig) == sig);
  for (const auto& lam : partitions_in(s)) {
    HeckeElement T = t_lambda(H, s, lam, sig);
    for (const auto& [w, c] : T.terms) CHECK(grassmannian_part(w, s) == lam);
    for (const auto& v : parabolic_subgroup(s))
      CHECK(H.mul(T, tbar(v)) == H.params().p.pow(v.length()) * T);
  }
}

TEST_CASE("monomial theorem, small cases") {
  VarUniverse u3{3}, u5{5};
  {
    GrassSetting s(3, 1);
    HeckeAlgebra H(3, rational_params(u3, 2, 7, Rational(3, 11)));
    HeckeElement sig = sigma(H, s);
    LeftMultiplesCache C(H, sig);
    Partition mu({1});
    CHECK(amonomial_rhs(H, s, mu, {}, sig) == C.get(grassmannian_perm(mu, s)));
    CHECK(amonomial_lhs(H, s, mu, {1}, C) == amonomial_rhs(H, s, mu, {1}, sig));
  }
  {
    GrassSetting s(5, 2);
    HeckeAlgebra H(5, rational_params(u5, 5, 3, Rational(7, 2)));
    HeckeElement sig = sigma(H, s);
    LeftMultiplesCache C(H, sig);
    Partition mu({2, 0});
    CHECK(amonomial_lhs(H, s, mu, {1, 2}, C) == amonomial_rhs(H, s, mu, {1, 2}, sig));
    // Applying the rows in the opposite order is a different operator.
    OpContext ctx(s, H.params(), true);
    int differs = 0;
    for (const auto& nu : partitions_in(s)) {
      GrassVector wrong = basis_vector(nu, u5);
      for (int row : {1, 2}) wrong = apply_op(ctx, op::dual(op::fhead), row, wrong);
      differs += amonomial_lhs(H, s, nu, {1, 2}, C) != expand_grass(H, s, wrong, sig);
    }
    CHECK(differs > 0);
  }
}

TEST_CASE("symmetrizer identities and the monomial theorem up to n = 5") {
  for (const auto& s : settings_upto(5, 3)) {
    Comparator cmp(false);
    require_all_pass(check_hecke_symmetrizer(s, 7, 3, cmp));
  }
}

TEST_CASE("a fault in the engine side is caught") {
  Comparator cmp(true);
  auto rs = check_hecke_symmetrizer(GrassSetting(3, 1), 7, 1, cmp);
  long failed = 0;
  for (const auto& r : rs) failed += r.failed;
  CHECK(failed == 1);
}
