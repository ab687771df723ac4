#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ribbon/hecke.hpp"
#include "ribbon/refined.hpp"
#include "ribbon/ribbonops.hpp"
#include "ribbon/schurep.hpp"
#include "ribbon/shapes.hpp"
#include "ribbon/symfunc.hpp"

namespace ribbon {

// Outcome of one identity family at one setting.  report_only checks are
// printed but never fail a suite.
struct CheckResult {
  CheckResult(std::string name_, std::string setting_) : name(std::move(name_)), setting(std::move(setting_)) {}

  std::string name;
  std::string setting;
  long cases = 0;
  long failed = 0;
  bool report_only = false;
  std::vector<std::string> counterexamples;

  bool ok() const { return report_only || failed == 0; }
  void fail(const std::string& why) {
    ++failed;
    if (counterexamples.size() < 5) counterexamples.push_back(why);
  }
};

struct VerifyOptions {
  int n_max = 5;
  std::uint64_t seed = 1;
  int samples = 3;
  bool inject_fault = false;
  int workers = 1;
};

// Compares engine output against an oracle.  With a fault armed, the first
// comparison it sees gets a corrupted engine side: the negative control.
class Comparator {
 public:
  explicit Comparator(bool fault) : fault_(fault) {}

  template <class T>
  bool same(T engine, const T& oracle) {
    if (fault_ && !fired_) {
      fired_ = true;
      corrupt(engine);
    }
    return engine == oracle;
  }

 private:
  static void corrupt(MultiPoly& f) { f = f + MultiPoly::constant(f.has_universe() ? f.universe() : VarUniverse{1}, 1); }
  template <class K>
  static void corrupt(std::map<K, MultiPoly>& v) {
    if (v.empty()) return;
    auto& c = v.begin()->second;
    c = c + MultiPoly::constant(c.universe(), 1);
  }
  static void corrupt(HeckeElement& h) { h.add(Permutation::identity(h.n), MultiPoly::constant(VarUniverse{h.n}, 1)); }
  static void corrupt(bool& b) { b = !b; }
  static void corrupt(SymFunc& f) { f.add(std::vector<int>{}, Rational(1)); }
  static void corrupt(TruncatedX& t) { t.c[0] = t.c[0] + MultiPoly::constant(t.c[0].universe(), 1); }

  bool fault_;
  bool fired_ = false;
};

inline std::string setting_str(const GrassSetting& s) {
  return "n=" + std::to_string(s.n) + ",k=" + std::to_string(s.k);
}

inline std::string vec_str(const GrassVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [lam, c] : v) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + lam.str();
  }
  return s;
}

inline std::string seq_str(const std::vector<int>& I) {
  std::string s = "{";
  for (std::size_t i = 0; i < I.size(); ++i) s += (i ? "," : "") + std::to_string(I[i]);
  return s + "}";
}

// Nondegenerate rational parameters: p != q drawn from small primes, hbar a
// signed ratio of small primes.
inline HeckeParams random_params(std::mt19937_64& rng, VarUniverse u, std::string* label = nullptr) {
  static const int primes[] = {2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<int> pick(0, 5);
  int p = primes[pick(rng)], q = p;
  while (q == p) q = primes[pick(rng)];
  int hn = primes[pick(rng)], hd = primes[pick(rng)];
  if (rng() % 2) hn = -hn;
  Rational h(hn, hd);
  if (label) *label = "p=" + std::to_string(p) + ",q=" + std::to_string(q) + ",hbar=" + h.str();
  return {MultiPoly::constant(u, p), MultiPoly::constant(u, q), MultiPoly::constant(u, h)};
}

inline MultiPoly random_x_poly(std::mt19937_64& rng, VarUniverse u, int terms, int maxdeg) {
  std::uniform_int_distribution<int> var(1, u.n), deg(0, maxdeg), coef(-3, 3);
  MultiPoly f(u);
  for (int t = 0; t < terms; ++t) {
    MultiPoly m = MultiPoly::constant(u, coef(rng));
    int d = deg(rng);
    for (int j = 0; j < d; ++j) m *= MultiPoly::var(u, u.x(var(rng)));
    f += m;
  }
  return f;
}

inline HeckeElement random_hecke(std::mt19937_64& rng, int n, Basis b, int terms) {
  auto perms = all_permutations(n);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  HeckeElement h(n, b);
  for (int t = 0; t < terms; ++t) h.add(perms[pick(rng)], random_x_poly(rng, VarUniverse{n}, 2, 2));
  return h;
}

// Settings 1 <= k < n <= n_max with k <= k_max.
inline std::vector<GrassSetting> settings_upto(int n_max, int k_max = 16) {
  std::vector<GrassSetting> out;
  for (int n = 2; n <= n_max; ++n)
    for (int k = 1; k < n && k <= k_max; ++k) out.emplace_back(n, k);
  return out;
}

// Runs tasks on a small pool; results keep task order.
inline std::vector<CheckResult> run_tasks(const std::vector<std::function<std::vector<CheckResult>()>>& tasks,
                                          int workers) {
  std::vector<std::vector<CheckResult>> slots(tasks.size());
  if (workers <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < tasks.size();) slots[i] = tasks[i]();
      });
    for (auto& t : pool) t.join();
  }
  std::vector<CheckResult> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

// ---------------------------------------------------------------------------
// Hecke algebra relations, symbolic in p, q, hbar.

inline std::vector<CheckResult> check_hecke_relations(int n, std::uint64_t seed, Comparator& cmp) {
  std::mt19937_64 rng(seed * 7919 + n);
  HeckeAlgebra H = HeckeAlgebra::symbolic(n);
  VarUniverse u{n};
  const auto& P = H.params();
  std::string where = "n=" + std::to_string(n);
  std::vector<CheckResult> out;

  CheckResult quad{"quadratic", where};
  CheckResult braid{"braid", where};
  for (int trial = 0; trial < 4; ++trial)
    for (Basis b : {Basis::T, Basis::Tbar}) {
      HeckeElement h = random_hecke(rng, n, b, 3);
      for (int i = 1; i < n; ++i) {
        ++quad.cases;
        HeckeElement once = H.gen_times(i, h), twice = H.gen_times(i, once);
        MultiPoly lin = b == Basis::T ? -P.p_minus_q() : P.p_minus_q();
        if (!cmp.same(twice, lin * once + P.pq() * h)) quad.fail("generator " + std::to_string(i) + " on " + h.str());
        for (int j = i + 1; j < n; ++j) {
          ++braid.cases;
          if (j == i + 1) {
            HeckeElement l = H.word_times({i, j, i}, h), r = H.word_times({j, i, j}, h);
            if (!cmp.same(l, r)) braid.fail("i=" + std::to_string(i) + " on " + h.str());
          } else if (!cmp.same(H.word_times({i, j}, h), H.word_times({j, i}, h))) {
            braid.fail("commuting pair " + std::to_string(i) + "," + std::to_string(j));
          }
        }
      }
    }
  out.push_back(quad);
  out.push_back(braid);

  CheckResult leib{"leibniz", where};
  for (int i = 1; i < n; ++i) {
    auto X = [&](int j) { return MultiPoly::var(u, u.x(j)); };
    for (Basis b : {Basis::T, Basis::Tbar}) {
      HeckeElement g = HeckeElement::basis_element(Permutation::simple(n, i), b);
      MultiPoly shift = P.hbar - P.p_minus_q() * X(b == Basis::T ? i : i + 1);
      HeckeElement want = X(i + 1) * g + HeckeElement::poly(n, shift, b);
      ++leib.cases;
      if (!cmp.same(H.times_x(g, i), want)) leib.fail("X_i x_i at i=" + std::to_string(i));
      HeckeElement want2 = X(i) * g - HeckeElement::poly(n, shift, b);
      ++leib.cases;
      if (!cmp.same(H.times_x(g, i + 1), want2)) leib.fail("X_i x_{i+1} at i=" + std::to_string(i));
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == i + 1) continue;
        ++leib.cases;
        if (!cmp.same(H.times_x(g, j), X(j) * g)) leib.fail("X_i x_j distant at i=" + std::to_string(i));
      }
    }
  }
  // x's still commute after normal ordering.
  for (int trial = 0; trial < 3; ++trial) {
    HeckeElement h = random_hecke(rng, n, Basis::Tbar, 2);
    for (int a = 1; a <= n; ++a)
      for (int c = a + 1; c <= n; ++c) {
        ++leib.cases;
        if (!cmp.same(H.times_x(H.times_x(h, a), c), H.times_x(H.times_x(h, c), a)))
          leib.fail("x_" + std::to_string(a) + " x_" + std::to_string(c) + " on " + h.str());
      }
  }
  out.push_back(leib);

  CheckResult word{"reduced-word-independence", where};
  MultiPoly f = MultiPoly::var(u, u.x(1)) * (n >= 2 ? MultiPoly::var(u, u.x(2)) : MultiPoly::constant(u, 1));
  for (const auto& w : all_permutations(n)) {
    // Second reduced word: always peel the largest left descent.
    std::vector<int> alt;
    Permutation v = w;
    while (v.length() > 0) {
      int i = n - 1;
      while (!v.left_descent(i)) --i;
      alt.push_back(i);
      v = v.s_times(i);
    }
    ++word.cases;
    HeckeElement start = HeckeElement::poly(n, f);
    if (!cmp.same(H.word_times(w.reduced_word(), start), H.word_times(alt, start))) word.fail("w=" + w.str());
  }
  out.push_back(word);

  CheckResult sym{"symmetric-commute", where};
  for (int i = 1; i < n; ++i) {
    MultiPoly a = MultiPoly::var(u, u.x(i)), b = MultiPoly::var(u, u.x(i + 1));
    for (const MultiPoly& g : {a + b, a * b, (a + b) * a * b, (a * b).pow(2) + (a + b)}) {
      ++sym.cases;
      HeckeElement gi = HeckeElement::basis_element(Permutation::simple(n, i), Basis::Tbar);
      if (!cmp.same(H.gen_times(i, HeckeElement::poly(n, g)), g * gi)) sym.fail("f=" + g.str());
    }
  }
  out.push_back(sym);

  CheckResult eps{"top-coefficient-pairing", where};
  Permutation w0 = Permutation::longest(n);
  for (const auto& a : all_permutations(n)) {
    HeckeElement ta = H.to_basis(HeckeElement::basis_element(a, Basis::Tbar), Basis::T);
    for (const auto& b : all_permutations(n)) {
      ++eps.cases;
      MultiPoly c = H.mul(ta, HeckeElement::basis_element(b, Basis::T)).coefficient(w0);
      MultiPoly want = MultiPoly::constant(u, a * b == w0 ? 1 : 0);
      if (!cmp.same(c, want)) eps.fail("u=" + a.str() + " v=" + b.str() + " gives " + c.str());
    }
  }
  out.push_back(eps);

  CheckResult basis{"basis-round-trip", where};
  for (int trial = 0; trial < 3; ++trial) {
    HeckeElement h = random_hecke(rng, n, Basis::Tbar, 3);
    ++basis.cases;
    if (!cmp.same(H.to_basis(H.to_basis(h, Basis::T), Basis::Tbar), h)) basis.fail(h.str());
  }
  out.push_back(basis);
  return out;
}

// ---------------------------------------------------------------------------
// Symmetrizer identities and the monomial theorem, at random rational
// parameters.

inline std::vector<int> raised_word(int base, int j) {
  std::vector<int> w;
  for (int a = base + j - 1; a >= base; --a) w.push_back(a);
  return w;
}

inline std::vector<CheckResult> check_hecke_symmetrizer(const GrassSetting& s, std::uint64_t seed, int samples,
                                                        Comparator& cmp) {
  std::mt19937_64 rng(seed * 104729 + s.n * 31 + s.k);
  VarUniverse u{s.n};
  std::vector<CheckResult> out;
  CheckResult absorb{"sigma-absorbs", setting_str(s)};
  CheckResult tl{"t-lambda", setting_str(s)};
  CheckResult lem4{"raised-x-telescoping", setting_str(s)};
  CheckResult lem31{"ribbon-deletion-word", setting_str(s)};
  CheckResult amon{"monomial-theorem", setting_str(s)};
  CheckResult elem{"elementary-theorem", setting_str(s)};
  CheckResult qid{"q-identity", setting_str(s)};

  for (int sample = 0; sample < samples; ++sample) {
    std::string label;
    HeckeAlgebra H(s.n, random_params(rng, u, &label));
    const auto& P = H.params();
    HeckeElement sig = sigma(H, s);
    LeftMultiplesCache C(H, sig);
    std::string at = " at " + label;

    ++qid.cases;
    MultiPoly total(u);
    int d = parabolic_d(s);
    for (const auto& v : parabolic_subgroup(s)) total += P.q.pow(d - v.length()) * P.p.pow(v.length());
    if (!cmp.same(total, sigma_normalizer(H, s))) qid.fail(total.str() + at);

    for (int i = 1; i < s.n; ++i) {
      if (i == s.k) continue;
      ++absorb.cases;
      HeckeElement gi = HeckeElement::basis_element(Permutation::simple(s.n, i), Basis::Tbar);
      HeckeElement left = H.gen_times(i, sig), right = H.mul(sig, gi);
      if (!cmp.same(left, P.p * sig) || right != P.p * sig) absorb.fail("i=" + std::to_string(i) + at);
    }

    std::set<Permutation> seen;
    for (const auto& lam : partitions_in(s)) {
      HeckeElement T = C.get(grassmannian_perm(lam, s));
      ++tl.cases;
      if (!cmp.same(T, t_lambda(H, s, lam, sig))) tl.fail("column word differs at " + lam.str() + at);
      for (const auto& [w, c] : T.terms)
        if (grassmannian_part(w, s) != lam) tl.fail("support of " + lam.str() + " contains " + w.str() + at);
      for (int i = 1; i < s.n; ++i) {
        if (i == s.k) continue;
        ++tl.cases;
        HeckeElement gi = HeckeElement::basis_element(Permutation::simple(s.n, i), Basis::Tbar);
        if (H.mul(T, gi) != P.p * T) tl.fail("right absorption at " + lam.str() + " i=" + std::to_string(i) + at);
      }
    }
    for (const auto& w : all_permutations(s.n)) {
      auto [lam, v] = parabolic_decompose(w, s);
      ++tl.cases;
      if (C.get(w) != P.p.pow(v.length()) * C.get(grassmannian_perm(lam, s))) tl.fail("w=" + w.str() + at);
    }

    // Tbar_k^{[j]} x_k Sigma telescopes.
    for (int j = 0; s.k + j <= s.n; ++j) {
      ++lem4.cases;
      MultiPoly xk = MultiPoly::var(u, u.x(s.k)), xkj = MultiPoly::var(u, u.x(s.k + j));
      HeckeElement lhs = C.apply(H.word_times(raised_word(s.k, j), HeckeElement::poly(s.n, xk)));
      HeckeElement rhs = xkj * C.get(Permutation::from_word(s.n, raised_word(s.k, j)));
      for (int a = 0; a <= j - 1; ++a)
        rhs += ((P.hbar - P.p_minus_q() * xkj) * P.q.pow(j - 1 - a)) *
               C.get(Permutation::from_word(s.n, raised_word(s.k, a)));
      if (!cmp.same(lhs, rhs)) lem4.fail("j=" + std::to_string(j) + at);
    }

    // Shortening row i of the column word deletes a ribbon with head in row i.
    for (const auto& lam : partitions_in(s))
      for (int i = 1; i <= s.k; ++i)
        for (int a = 0; a < lam[i]; ++a) {
          std::vector<int> word;
          for (int base = 1; base <= s.k; ++base) {
            int row = s.k + 1 - base;
            auto piece = raised_word(base, row == i ? a : lam[row]);
            word.insert(word.end(), piece.begin(), piece.end());
          }
          std::optional<Ribbon> rb;
          for (const auto& cand : removable_with_head_in_row(lam, i, s))
            if (cand.wd == lam[i] - a) rb = cand;
          ++lem31.cases;
          if (!rb) {
            lem31.fail("no ribbon of width " + std::to_string(lam[i] - a) + " in " + lam.str());
            continue;
          }
          HeckeElement lhs = H.word_times(word, sig);
          HeckeElement rhs = P.p.pow(rb->ht - 1) * C.get(grassmannian_perm(rb->inner, s));
          if (!cmp.same(lhs, rhs)) lem31.fail(lam.str() + " i=" + std::to_string(i) + " a=" + std::to_string(a) + at);
        }

    // Monomial theorem and its elementary-symmetric sum.
    for (const auto& mu : partitions_in(s)) {
      HeckeElement T = C.get(grassmannian_perm(mu, s));
      for (int r = 0; r <= s.k; ++r) {
        GrassVector sum;
        for (const auto& I : index_sets(s.k, r)) {
          ++amon.cases;
          GrassVector g = amonomial_grass(H, s, mu, I);
          sum = sum + g;
          HeckeElement rhs(s.n, Basis::Tbar);
          for (const auto& [lam, c] : g) rhs += c * C.get(grassmannian_perm(lam, s));
          if (!cmp.same(amonomial_lhs(H, s, mu, I, C), rhs))
            amon.fail("mu=" + mu.str() + " I=" + seq_str(I) + at);
        }
        ++elem.cases;
        HeckeElement rhs(s.n, Basis::Tbar);
        for (const auto& [lam, c] : sum) rhs += c * C.get(grassmannian_perm(lam, s));
        if (!cmp.same(H.times_poly(T, elementary_x(u, r, s.k)), rhs))
          elem.fail("mu=" + mu.str() + " r=" + std::to_string(r) + at);
      }
    }
  }
  out.insert(out.end(), {qid, absorb, tl, lem4, lem31, amon, elem});
  return out;
}

// Ribbon-word identity Tbar_{i-1}^{[a]} Tbar_i^{[b]} = Tbar_{i-1}^{[b]} Tbar_{i-1}^{[a]}, a > b.
inline CheckResult check_ribbon_word_identity(int n, Comparator& cmp) {
  HeckeAlgebra H = HeckeAlgebra::symbolic(n);
  CheckResult c{"ribbon-word-commutation", "n=" + std::to_string(n)};
  for (int i = 2; i < n; ++i)
    for (int a = 1; i - 1 + a - 1 <= n - 1; ++a)
      for (int b = 0; b < a && i + b - 1 <= n - 1; ++b) {
        auto lw = raised_word(i - 1, a), lb = raised_word(i, b);
        auto rw = raised_word(i - 1, b), rb = raised_word(i - 1, a);
        lw.insert(lw.end(), lb.begin(), lb.end());
        rw.insert(rw.end(), rb.begin(), rb.end());
        ++c.cases;
        HeckeElement one = HeckeElement::one(n, Basis::Tbar);
        if (!cmp.same(H.word_times(lw, one), H.word_times(rw, one)))
          c.fail("i=" + std::to_string(i) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
  return c;
}

// ---------------------------------------------------------------------------
// Ribbon Pieri engine against the representation oracle.

inline CheckResult check_pieri_oracle(const GrassSetting& s, Comparator& cmp) {
  CheckResult c{"pieri-vs-oracle", setting_str(s)};
  PieriOracle O(s);
  for (const auto& e : class_kinds())
    for (const auto& lam : partitions_in(s))
      for (int r = 0; r <= s.k; ++r) {
        ++c.cases;
        GrassVector engine = pieri(e.kind, lam, r, s);
        GrassVector oracle;
        try {
          oracle = O.run(e.kind, lam, r);
        } catch (const consistency_error& err) {
          c.fail(std::string(e.name) + " " + lam.str() + " r=" + std::to_string(r) + ": " + err.what());
          continue;
        }
        if (!cmp.same(engine, oracle))
          c.fail(std::string(e.name) + " lambda=" + lam.str() + " r=" + std::to_string(r) + " engine " +
                 vec_str(engine) + " oracle " + vec_str(oracle));
      }
  return c;
}

// Representation-side structure: duality, reconstruction, Pi on flag classes,
// evaluation, and the general-f oracle path.
inline std::vector<CheckResult> check_representation(const GrassSetting& s, std::uint64_t seed, Comparator& cmp) {
  std::mt19937_64 rng(seed * 15485863 + s.n * 17 + s.k);
  VarUniverse u{s.n};
  std::string label;
  HeckeParams prm = random_params(rng, u, &label);
  SchubertRep R(s.n, prm);
  const HeckeAlgebra& H = R.algebra();
  HeckeElement sig = sigma(H, s);
  std::string at = " at " + label;
  std::vector<CheckResult> out;

  CheckResult dual{"duality", setting_str(s)};
  std::map<Partition, HeckeElement> T;
  for (const auto& mu : partitions_in(s)) T[mu] = t_lambda(H, s, mu, sig);
  for (const auto& mu : partitions_in(s))
    for (const auto& nu : partitions_in(s)) {
      ++dual.cases;
      MultiPoly e = SchubertRep::ev(R.act(T[mu], R.grass_class(nu, s)));
      if (!cmp.same(e, MultiPoly::constant(u, mu == nu ? 1 : 0)))
        dual.fail("mu=" + mu.str() + " nu=" + nu.str() + " gives " + e.str() + at);
    }
  out.push_back(dual);

  CheckResult rec{"reconstruction", setting_str(s)};
  for (int trial = 0; trial < 3; ++trial) {
    GrassVector v;
    std::uniform_int_distribution<int> coef(-4, 4);
    for (const auto& lam : partitions_in(s))
      accumulate(v, lam, MultiPoly::constant(u, coef(rng)) + MultiPoly::var(u, u.t(1 + trial % s.n)));
    FlagClassVector flag = R.lift(v, s);
    GrassVector back;
    for (const auto& lam : partitions_in(s)) accumulate(back, lam, SchubertRep::ev(R.act(T[lam], flag)));
    ++rec.cases;
    if (!cmp.same(back, v)) rec.fail(vec_str(v) + at);
  }
  out.push_back(rec);

  CheckResult pic{"pi-on-flag-classes", setting_str(s)};
  HeckeElement Pi = pi_symmetrizer(H, s);
  int d = parabolic_d(s);
  for (const auto& lam : partitions_in(s))
    for (const auto& v : parabolic_subgroup(s)) {
      ++pic.cases;
      Permutation w = grassmannian_perm(lam, s) * v;
      FlagClassVector got = R.act(Pi, FlagClassVector{{w, MultiPoly::constant(u, 1)}});
      FlagClassVector want;
      for (const auto& [y, c] : R.grass_class(lam, s)) accumulate(want, y, prm.q.pow(d - v.length()) * c);
      if (!cmp.same(got, want)) pic.fail("w=" + w.str() + at);
    }
  out.push_back(pic);

  CheckResult evx{"evaluation-of-x", setting_str(s)};
  auto perms = all_permutations(s.n);
  for (int trial = 0; trial < 3; ++trial) {
    FlagClassVector v;
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int t = 0; t < 4; ++t) accumulate(v, perms[pick(rng)], MultiPoly::constant(u, 1 + t));
    accumulate(v, Permutation::identity(s.n), MultiPoly::constant(u, 3));
    for (int i = 1; i <= s.n; ++i) {
      ++evx.cases;
      if (!cmp.same(SchubertRep::ev(R.act_x(i, v)), MultiPoly::var(u, u.t(i)) * SchubertRep::ev(v)))
        evx.fail("i=" + std::to_string(i));
    }
  }
  out.push_back(evx);

  CheckResult gen{"oracle-general-f", setting_str(s)};
  for (const auto& lam : partitions_in(s))
    for (int r = 0; r <= s.k; ++r) {
      ++gen.cases;
      if (!cmp.same(R.oracle_pieri(lam, elementary_x(u, r, s.k), s), R.oracle_elementary(lam, r, s)))
        gen.fail("lambda=" + lam.str() + " r=" + std::to_string(r) + at);
    }
  // Module action associativity: e_1 e_r at once versus one after another.
  for (const auto& lam : partitions_in(s))
    for (int r = 1; r <= s.k; ++r) {
      ++gen.cases;
      MultiPoly f = elementary_x(u, 1, s.k) * elementary_x(u, r, s.k);
      GrassVector once = R.oracle_pieri(lam, f, s);
      FlagClassVector step = R.act_poly(elementary_x(u, 1, s.k), R.lift(R.oracle_elementary(lam, r, s), s));
      if (!cmp.same(once, R.collapse(step, s))) gen.fail("e1*e" + std::to_string(r) + " at " + lam.str());
    }
  out.push_back(gen);
  return out;
}

// ---------------------------------------------------------------------------
// Appendix: the four summed equalities and the refined-operator claims.

inline std::vector<CheckResult> check_appendix(const GrassSetting& s, Comparator& cmp) {
  OpContext ctx = OpContext::symbolic(s);
  VarUniverse u{s.n};
  std::vector<CheckResult> out;
  const std::pair<RibbonOpKind, RibbonOpKind> pairs[] = {{op::fhead, op::xftail},
                                                         {op::xfhead, op::ftail},
                                                         {op::dual(op::fhead), op::dual(op::xftail)},
                                                         {op::dual(op::xfhead), op::dual(op::ftail)}};
  for (const auto& [L, R] : pairs) {
    CheckResult c{"sum-equality " + op_name(L) + "=" + op_name(R), setting_str(s)};
    for (const auto& lam : partitions_in(s))
      for (int r = 0; r <= s.k; ++r) {
        ++c.cases;
        GrassVector a = chain_sum(ctx, L, basis_vector(lam, u), r), b = chain_sum(ctx, R, basis_vector(lam, u), r);
        if (!cmp.same(a, b)) c.fail(lam.str() + " r=" + std::to_string(r) + ": " + vec_str(a) + " vs " + vec_str(b));
      }
    out.push_back(c);
  }
  CheckResult regroup{"refined-regrouping", setting_str(s)};
  CheckResult c1{"claim-1", setting_str(s)}, c1p{"claim-1'", setting_str(s)};
  CheckResult c2{"claim-2", setting_str(s)}, c2p{"claim-2'", setting_str(s)}, phi{"phi-bijection", setting_str(s)};
  for (const auto& lam : partitions_in(s)) {
    for (int i = 1; i <= s.k; ++i) {
      regroup.cases += 2;
      if (!cmp.same(regroup_row(ctx, lam, i, false), apply_op(ctx, op::fhead, i, basis_vector(lam, u))))
        regroup.fail("head row " + std::to_string(i) + " at " + lam.str());
      if (regroup_row(ctx, lam, i, true) != apply_op(ctx, op::xftail, i, basis_vector(lam, u)))
        regroup.fail("tail row " + std::to_string(i) + " at " + lam.str());
    }
    ++c1.cases;
    if (auto e = check_swap_claim(ctx, lam, false)) c1.fail(*e);
    ++c1p.cases;
    if (auto e = check_swap_claim(ctx, lam, true)) c1p.fail(*e);
    for (int r = 0; r <= s.k; ++r) {
      ++c2.cases;
      if (auto e = check_distinct_claim(ctx, lam, r, false)) c2.fail(*e);
      ++c2p.cases;
      if (auto e = check_distinct_claim(ctx, lam, r, true)) c2p.fail(*e);
      ++phi.cases;
      if (auto e = check_phi(ctx, lam, r)) phi.fail(*e);
    }
  }
  out.insert(out.end(), {regroup, c1, c1p, c2, c2p, phi});
  return out;
}

// ---------------------------------------------------------------------------
// The factor D_lambda = prod_{j <= k} (1 - t_{w_lambda(j)}).

inline MultiPoly d_factor(const Partition& lam, const GrassSetting& s) {
  VarUniverse u{s.n};
  Permutation w = grassmannian_perm(lam, s);
  MultiPoly d = MultiPoly::constant(u, 1);
  for (int j = 1; j <= s.k; ++j) d *= MultiPoly::constant(u, 1) - MultiPoly::var(u, u.t(w(j)));
  return d;
}

inline std::vector<CheckResult> check_intertwining(const GrassSetting& s, Comparator& cmp) {
  VarUniverse u{s.n};
  CheckResult rb{"ribbon-factor-identity", setting_str(s)};
  auto one = MultiPoly::constant(u, 1);
  for (const auto& lam : partitions_in(s))
    for (const auto& r : addable_ribbons(lam, s)) {
      ++rb.cases;
      MultiPoly l = (one - MultiPoly::var(u, u.t(r.tail_value))) * d_factor(r.outer, s);
      MultiPoly rt = (one - MultiPoly::var(u, u.t(r.head_value))) * d_factor(lam, s);
      if (!cmp.same(l, rt)) rb.fail(r.outer.str() + "/" + lam.str());
    }
  std::vector<CheckResult> out{rb};
  if (s.n > 6) return out;

  CheckResult opc{"operator-intertwining", setting_str(s)};
  OpContext ctx(s, kind_params(ClassKind::MotivicChern, u));
  auto L = [&](const GrassVector& v) {
    GrassVector r;
    for (const auto& [lam, c] : v) accumulate(r, lam, c * d_factor(lam, s));
    return r;
  };
  for (const auto& lam : partitions_in(s)) {
    GrassVector b = basis_vector(lam, u);
    // Rows group ribbons by head on one side and by tail on the other, so
    // only the sum over rows intertwines.
    GrassVector tails, heads;
    for (int i = 1; i <= s.k; ++i) {
      tails = tails + L(apply_op(ctx, op::ftail, i, b));
      heads = heads + apply_op(ctx, op::fhead, i, L(b));
    }
    ++opc.cases;
    if (!cmp.same(tails, heads)) opc.fail("row sum at " + lam.str());
    for (int r = 0; r <= s.k; ++r) {
      ++opc.cases;
      if (L(chain_sum(ctx, op::ftail, b, r)) != chain_sum(ctx, op::fhead, L(b), r))
        opc.fail("chains r=" + std::to_string(r) + " at " + lam.str());
    }
  }
  out.push_back(opc);
  return out;
}

// ---------------------------------------------------------------------------
// Specializations.

inline Substitution t_zero(VarUniverse u) {
  Substitution z;
  z.value.resize(u.size());
  for (int i = 1; i <= u.n; ++i) z.value[u.t(i)] = MultiPoly(u);
  return z;
}
inline Substitution y_zero(VarUniverse u) {
  Substitution z;
  z.value.resize(u.size());
  z.value[VarUniverse::Y] = MultiPoly(u);
  return z;
}

// mu/lambda a vertical strip that splits into r connected vertical strips
// taken top to bottom.
inline bool lenart_shape(const Partition& lam, const Partition& mu, int r) {
  if (!mu.contains(lam) || !vertical_strip_check(lam, mu)) return false;
  int boxes = mu.size() - lam.size();
  auto comps = connected_vertical_strips(lam, mu);
  int c = comps ? *comps : 0;
  return c <= r && r <= boxes;
}

inline std::vector<CheckResult> check_specializations(const GrassSetting& s, Comparator& cmp) {
  VarUniverse u{s.n};
  std::vector<CheckResult> out;
  CheckResult y0{"y-zero", setting_str(s)};
  CheckResult sch{"schubert-vertical-strips", setting_str(s)};
  CheckResult len{"structure-sheaf-lenart", setting_str(s)};
  CheckResult csm{"csm-coincidence", setting_str(s)};
  CheckResult omg{"dualizing-sheaf-rule", setting_str(s)};
  CheckResult opp{"opposite-cells", setting_str(s)};
  CheckResult trn{"mc-smc-transpose", setting_str(s)};
  CheckResult com{"pieri-commute", setting_str(s)};
  Substitution Y0 = y_zero(u), T0 = t_zero(u);

  std::map<int, std::map<Partition, GrassVector>> Omc;
  for (int r = 0; r <= s.k; ++r) Omc[r] = omega_from_mc(s, r);

  for (const auto& lam : partitions_in(s))
    for (int r = 0; r <= s.k; ++r) {
      std::string at = lam.str() + " r=" + std::to_string(r);
      y0.cases += 2;
      if (!cmp.same(substitute(pieri(ClassKind::MotivicChern, lam, r, s), Y0), pieri(ClassKind::IdealSheaf, lam, r, s)))
        y0.fail("MC->I " + at);
      if (substitute(pieri(ClassKind::SegreMotivic, lam, r, s), Y0) != pieri(ClassKind::StructureSheaf, lam, r, s))
        y0.fail("SMC->O " + at);

      ++sch.cases;
      GrassVector want;
      for (const auto& mu : partitions_in(s))
        if (mu.contains(lam) && vertical_strip_check(lam, mu) && mu.size() - lam.size() == r)
          accumulate(want, mu, MultiPoly::constant(u, 1));
      if (!cmp.same(substitute(pieri(ClassKind::Schubert, lam, r, s), T0), want)) sch.fail(at);

      ++len.cases;
      GrassVector o = substitute(pieri(ClassKind::StructureSheaf, lam, r, s), T0);
      for (const auto& mu : partitions_in(s)) {
        bool present = o.count(mu) > 0;
        if (present != lenart_shape(lam, mu, r)) len.fail("support at " + mu.str() + " from " + at);
        if (present && o.at(mu).constant_term().sign() <= 0) len.fail("nonpositive coefficient at " + mu.str());
      }

      ++csm.cases;
      if (!cmp.same(pieri(ClassKind::CSM, lam, r, s), pieri(ClassKind::SegreMacPherson, lam, r, s))) csm.fail(at);

      omg.cases += 2;
      GrassVector rule = omega_pieri(lam, r, s);
      if (!cmp.same(Omc[r].at(lam), rule)) omg.fail("top-y extraction differs at " + at);
      if (pieri(ClassKind::DualizingSheaf, lam, r, s) != rule) omg.fail("dualizing-sheaf kind differs at " + at);

      ++opp.cases;
      for (ClassKind k : {ClassKind::MotivicChern, ClassKind::Schubert, ClassKind::IdealSheaf})
        if (!cmp.same(pieri_opposite_direct(k, lam, r, s), pieri_opposite_twisted(k, lam, r, s)))
          opp.fail(std::string(info(k).name) + " " + at);

      ++trn.cases;
      GrassVector smc = pieri(ClassKind::SegreMotivic, lam, r, s);
      for (const auto& mu : partitions_in(s)) {
        GrassVector x = pieri_opposite_direct(ClassKind::MotivicChern, mu, r, s);
        MultiPoly a = x.count(lam) ? x.at(lam) : MultiPoly(u);
        MultiPoly b = smc.count(mu) ? smc.at(mu) : MultiPoly(u);
        if (a != b) trn.fail("X " + mu.str() + "->" + lam.str() + " vs Y at r=" + std::to_string(r));
      }

      for (int r2 = r + 1; r2 <= s.k; ++r2) {
        ++com.cases;
        for (ClassKind k : {ClassKind::MotivicChern, ClassKind::SegreMotivic}) {
          GrassVector ab, ba;
          for (const auto& [mu, c] : pieri(k, lam, r, s))
            ab = ab + scale(pieri(k, mu, r2, s), c);
          for (const auto& [mu, c] : pieri(k, lam, r2, s))
            ba = ba + scale(pieri(k, mu, r, s), c);
          if (!cmp.same(ab, ba)) com.fail(std::string(info(k).name) + " " + at + " with " + std::to_string(r2));
        }
      }
    }
  out.insert(out.end(), {y0, sch, len, csm, omg, opp, trn, com});
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric functions and the dualizing-sheaf theorem.

inline std::vector<CheckResult> check_symfunc_basics(std::uint64_t seed, Comparator& cmp) {
  std::vector<CheckResult> out;
  const int D = 5;
  VarUniverse u{D};
  std::vector<Partition> shapes;
  for (int a = 1; a <= 3; ++a)
    for (int b = 0; b <= a && a + b <= 3; ++b)
      for (int c = 0; c <= b && a + b + c <= 3; ++c) shapes.push_back(Partition({a, b, c}).trimmed());

  CheckResult sign{"G-K-signs", "D=5,m=4"};
  CheckResult jj{"J-two-ways", "D=5,m=5"};
  CheckResult symm{"symmetry", "D=5,m=4"};
  for (const auto& lam : shapes) {
    MultiPoly G = grothendieck_G(lam, 4, D, u), K = grothendieck_K(lam, 4, D, u);
    ++sign.cases;
    std::vector<MultiPoly::Term> abs;
    for (const auto& [m, c] : G.terms()) abs.push_back({m, c.sign() < 0 ? -c : c});
    if (!cmp.same(MultiPoly::from_terms(u, abs), K)) sign.fail(lam.str());
    for (const auto& [m, c] : G.terms())
      if ((c.sign() < 0) != ((m.degree() - lam.size()) % 2 == 1)) sign.fail("sign pattern at " + lam.str());
    ++jj.cases;
    if (!cmp.same(weak_J_via_omega(lam, D, u), weak_J(lam, D, D, u))) jj.fail(lam.str());
    for (const MultiPoly& f : {G, weak_J(lam, 4, D, u)})
      for (int i = 1; i < 4; ++i) {
        ++symm.cases;
        if (!cmp.same(swap_x(f, i), f)) symm.fail(lam.str() + " swap " + std::to_string(i));
      }
  }
  out.insert(out.end(), {sign, jj, symm});

  CheckResult inv{"omega-involution", "D=6,m=6"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5), idx(1, 3);
  for (int trial = 0; trial < 5; ++trial) {
    SymFunc f(6, 6);
    for (int t = 0; t < 4; ++t) {
      std::vector<int> key;
      int deg = 0;
      while (true) {
        int r = idx(rng);
        if (deg + r > 6 || key.size() >= 3) break;
        key.push_back(r);
        deg += r;
      }
      std::sort(key.rbegin(), key.rend());
      f.add(key, Rational(coef(rng)));
    }
    ++inv.cases;
    if (!cmp.same(omega(omega(f)), f)) inv.fail(f.str());
    ++inv.cases;
    auto h = complete_in_e(6, 6);
    for (int r = 1; r <= 3; ++r)
      if (omega(SymFunc::e(r, 6, 6)) != h[r]) inv.fail("omega(e" + std::to_string(r) + ")");
  }
  out.push_back(inv);

  // h_r K~_lambda = sum (-1)^{|mu/lambda| - r} K~_mu over mu with exactly r
  // nonempty columns in mu/lambda, compared on all terms of degree <= D.
  CheckResult lk{"h-times-K", "D=5,m=5"};
  for (const auto& lam : shapes) {
    if (lam.size() > 2) continue;
    for (int r = 1; r <= 2; ++r) {
      ++lk.cases;
      MultiPoly hr = to_poly(complete_in_e(D, D)[r], u);
      MultiPoly lhs = mul_trunc(hr, grothendieck_K(lam, D, D, u), D);
      MultiPoly rhs(u);
      Partition lt = lam.conjugate();
      // Enumerate mu containing lambda with |mu| <= D via conjugates.
      std::function<void(std::vector<int>&, int)> build = [&](std::vector<int>& parts, int row) {
        if (row == D) {
          Partition mu = Partition(parts).trimmed();
          Partition lp = lam.padded(D), mp = Partition(parts);
          if (!mp.contains(lp) || mu.size() > D) return;
          int cols = skew_nonempty_rows(lt.padded(D), mu.conjugate().padded(D));
          if (cols != r) return;
          int sgn = (mu.size() - lam.size() - r) % 2 ? -1 : 1;
          rhs += grothendieck_K(mu, D, D, u).scaled(Rational(sgn));
          return;
        }
        int hi = row == 0 ? D : parts[row - 1];
        for (int v = lam[row + 1]; v <= hi; ++v) {
          parts[row] = v;
          int used = 0;
          for (int j = 0; j <= row; ++j) used += parts[j];
          if (used > D) break;
          build(parts, row + 1);
        }
        parts[row] = 0;
      };
      std::vector<int> parts(D, 0);
      build(parts, 0);
      if (!cmp.same(lhs, truncate(rhs, D))) lk.fail(lam.str() + " r=" + std::to_string(r));
    }
  }
  out.push_back(lk);
  return out;
}

// Grothendieck Pieri in k variables against the t = 0 structure-sheaf rule.
inline CheckResult check_grothendieck_pieri(const GrassSetting& s, Comparator& cmp) {
  CheckResult c{"grothendieck-pieri", setting_str(s)};
  VarUniverse u{s.n};
  int D = s.dim() + s.k;
  Substitution T0 = t_zero(u);
  for (const auto& lam : partitions_in(s))
    for (int r = 1; r <= s.k; ++r) {
      ++c.cases;
      MultiPoly prod = mul_trunc(elementary_poly(u, r, s.k), grothendieck_G(lam, s.k, D, u), D);
      auto expansion = expand_in_G(prod, s.k, D);
      GrassVector sym;
      for (const auto& [mu, a] : expansion)
        if (mu.fits(s)) accumulate(sym, mu, MultiPoly::constant(u, a));
      GrassVector engine = substitute(pieri(ClassKind::StructureSheaf, lam, r, s), T0);
      if (!cmp.same(engine, sym)) c.fail(lam.str() + " r=" + std::to_string(r) + ": " + vec_str(engine) + " vs " + vec_str(sym));
    }
  return c;
}

struct TheoremEReport {
  std::vector<CheckResult> checks;
};

// The dualizing-sheaf theorem in structure-sheaf coordinates.  w_lambda =
// rho((1-G_box)^n J_{lambda'}) . 1 must (a) vanish outside the rectangle,
// (b) satisfy the dualizing-sheaf Pieri rule, (c) start at the canonical
// class (det V)^n with det V = 1 - O_box, and (d) end at the point class.
// (b) and (c) pin the family down: any family obeying the same rule is a
// module map of the unit image, and that image is fixed by (c).
inline std::vector<CheckResult> check_theorem_E(const GrassSetting& s, Comparator& cmp) {
  std::vector<CheckResult> out;
  VarUniverse u{s.n};
  int D = 2 * s.dim() + s.n;
  KGrassmannian K(s);
  std::string where = setting_str(s) + ",D=" + std::to_string(D);
  std::map<Partition, GrassVector> W;
  for (const auto& lam : partitions_in(s)) W[lam] = theorem_E_class(K, lam, D);

  CheckResult outside{"theorem-E-outside", where};
  for (int rows = 1; rows <= s.k + 1; ++rows)
    for (const auto& big : partitions_in(GrassSetting(s.n - s.k + 1 + rows, rows))) {
      Partition lam = big.trimmed();
      if (lam.padded(std::max(s.k, lam.length())).length() == s.k && lam.padded(s.k).fits(s)) continue;
      if (lam.length() <= s.k && lam.padded(s.k).fits(s)) continue;
      if (lam.size() > s.dim() + 2) continue;
      ++outside.cases;
      GrassVector w = theorem_E_class(K, lam, D);
      if (!cmp.same(w.empty(), true)) outside.fail(lam.str() + " gives " + vec_str(w));
    }
  out.push_back(outside);

  CheckResult rule{"theorem-E-pieri-rule", where};
  for (int r = 1; r <= s.k; ++r) {
    auto Om = omega_from_mc(s, r);
    for (const auto& lam : partitions_in(s)) {
      ++rule.cases;
      GrassVector lhs = K.c(r, W[lam]), rhs;
      for (const auto& [mu, c] : Om.at(lam)) rhs = rhs + scale(W[mu], c);
      if (!cmp.same(lhs, rhs)) rule.fail(lam.str() + " r=" + std::to_string(r));
    }
  }
  out.push_back(rule);

  CheckResult ends{"theorem-E-endpoints", where};
  GrassVector detV;
  for (int r = 0; r <= s.k; ++r) detV = detV + scale(K.c(r, K.unit()), MultiPoly::constant(u, r % 2 ? -1 : 1));
  GrassVector want = K.unit() - basis_vector(Partition(std::vector<int>(s.k, 0)).padded(s.k), u);
  GrassVector divisor = K.unit();
  {
    std::vector<int> box(s.k, 0);
    box[0] = 1;
    divisor = K.unit() - basis_vector(Partition(box), u);
  }
  ++ends.cases;
  if (!cmp.same(detV, divisor)) ends.fail("det V = " + vec_str(detV));
  GrassVector canon = K.unit();
  for (int i = 0; i < s.n; ++i) {
    GrassVector next;
    for (int r = 0; r <= s.k; ++r) next = next + scale(K.c(r, canon), MultiPoly::constant(u, r % 2 ? -1 : 1));
    canon = next;
  }
  ++ends.cases;
  if (W[empty_partition(s)] != canon) ends.fail("w_empty = " + vec_str(W[empty_partition(s)]));
  ++ends.cases;
  if (W[full_partition(s)] != basis_vector(full_partition(s), u)) ends.fail("w_full = " + vec_str(W[full_partition(s)]));
  (void)want;
  out.push_back(ends);

  if (s.k == 1) {
    // Projective space: compare with x^j (1 - x)^{n-j} in Q[x]/(x^n).
    CheckResult proj{"theorem-E-projective", where};
    for (const auto& lam : partitions_in(s)) {
      int j = lam[1];
      MultiPoly one = MultiPoly::constant(u, 1), x = MultiPoly::var(u, u.x(1));
      MultiPoly f = mul_trunc(pow_trunc(one - box_G(1, D, u), s.n, D), weak_J(lam.trimmed().conjugate(), 1, D, u), D);
      TruncatedX got = rho_projective(f, s.n);
      TruncatedX closed = rho_projective(x.pow(j) * (one - x).pow(s.n - j), s.n);
      ++proj.cases;
      if (!cmp.same(got == closed, true)) proj.fail("j=" + std::to_string(j) + " gives " + got.str());
      // The structure-sheaf coordinates agree: O_(i) = x^i.
      TruncatedX fromvec(s.n, u);
      for (const auto& [mu, c] : W[lam]) fromvec = fromvec + rho_projective(c * x.pow(mu[1]), s.n);
      ++proj.cases;
      if (!(fromvec == closed)) proj.fail("coordinates at j=" + std::to_string(j));
    }
    out.push_back(proj);
  }

  CheckResult buch{"rho-of-G-is-O", where};
  buch.report_only = true;
  for (const auto& lam : partitions_in(s)) {
    ++buch.cases;
    GrassVector g = K.rho(from_symmetric_poly(grothendieck_G(lam, s.k, D, u), s.k, D));
    if (g != basis_vector(lam, u)) buch.fail(lam.str() + " gives " + vec_str(g));
  }
  out.push_back(buch);
  return out;
}

// The projective line, in Q[x]/(x^2).  Classes with 1/(1+y) are carried
// multiplied through by (1+y).
inline CheckResult check_projective_line(Comparator& cmp) {
  CheckResult c{"projective-line-ledger", "n=2,k=1"};
  VarUniverse u{2};
  auto P = [&](const std::string& s) { return TruncatedX::from_poly(MultiPoly::parse(u, s), 2, u.x(1)); };
  auto C = [&](const std::string& s) { return TruncatedX::from_poly(MultiPoly::parse(u, s), 2, u.x(1)); };
  GrassSetting s(2, 1);
  KGrassmannian K(s);
  Partition E({0}), B({1});
  auto embed = [&](const GrassVector& v) {
    TruncatedX r(2, u);
    for (const auto& [mu, a] : v) r = r + TruncatedX::from_poly(a * MultiPoly::var(u, u.x(1), mu[1]), 2, u.x(1));
    return r;
  };

  // Structure sheaves: the unit and rho(G_box).
  ++c.cases;
  TruncatedX O_empty = embed(K.unit());
  TruncatedX O_box = embed(K.rho(from_symmetric_poly(box_G(1, 4, u), 1, 4)));
  if (!cmp.same(O_empty == P("1") && O_box == P("x1"), true)) c.fail("[O] classes " + O_empty.str() + ", " + O_box.str());

  // lambda_y of the cotangent bundle: 1 + y O(-2) = 1 + y (1 - x)^2.
  TruncatedX lam_y = P("1 + y*(1 - x1)^2");
  ++c.cases;
  if (!(lam_y == P("(1+y) - 2*y*x1"))) c.fail("lambda_y = " + lam_y.str());

  // Motivic Chern classes: the point, and additivity to the total class.
  TruncatedX M_box = P("x1");
  TruncatedX M_empty = lam_y - M_box;
  ++c.cases;
  if (!(M_empty == P("(1+y) - (2*y+1)*x1"))) c.fail("MC(empty) = " + M_empty.str());
  // Pieri consistency: c_1 = x acts as c_1 M_empty = (1+y) M_box, c_1 M_box = 0.
  GrassVector mc = substitute(pieri(ClassKind::MotivicChern, E, 1, s), t_zero(u));
  ++c.cases;
  TruncatedX x = P("x1");
  TruncatedX pieri_side(2, u);
  for (const auto& [mu, a] : mc) pieri_side = pieri_side + TruncatedX::from_poly(a, 2, u.x(1)) * (mu[1] ? M_box : M_empty);
  if (!(x * M_empty == pieri_side) || !((x * M_box) == P("0"))) c.fail("MC Pieri on P^1");

  // Segre motivic classes, cleared by (1+y): the basis dual to MC of the
  // opposite cells under chi(a + b x) = a + b.
  TruncatedX S_empty = C("(1+y) + y*x1"), S_box = C("x1");
  auto chi = [&](const TruncatedX& t) { return t.c[0] + t.c[1]; };
  auto onepy = MultiPoly::parse(u, "1+y");
  ++c.cases;
  bool dual_ok = chi(M_box * S_empty) == onepy && chi(M_box * S_box).is_zero() && chi(M_empty * S_empty).is_zero() &&
                 chi(M_empty * S_box) == onepy;
  if (!dual_ok) c.fail("SMC duality");
  // SMC Pieri: c_1 S_empty = (1+y) S_box.
  GrassVector smc = substitute(pieri(ClassKind::SegreMotivic, E, 1, s), t_zero(u));
  ++c.cases;
  TruncatedX s_side(2, u);
  for (const auto& [mu, a] : smc) s_side = s_side + TruncatedX::from_poly(a, 2, u.x(1)) * (mu[1] ? S_box : S_empty);
  if (!(x * S_empty == s_side)) c.fail("SMC Pieri on P^1");

  // lambda_y (1 - O_box) SMC = MC.
  TruncatedX one_minus = P("1") - O_box;
  TruncatedX scale1 = TruncatedX::from_poly(onepy, 2, u.x(1));
  c.cases += 2;
  if (!(lam_y * one_minus * S_empty == scale1 * M_empty)) c.fail("identity at empty");
  if (!(lam_y * one_minus * S_box == scale1 * M_box)) c.fail("identity at box");

  // Dualizing sheaves as top-y parts, and the two evaluations.
  auto top = [&](const TruncatedX& t, int e) {
    TruncatedX r(2, u);
    for (int i = 0; i < 2; ++i) r.c[i] = t.c[i].coefficient(VarUniverse::Y, e);
    return r;
  };
  TruncatedX w_empty = top(M_empty, 1), w_box = top(M_box, 0);
  c.cases += 2;
  if (!(w_empty == P("1 - 2*x1")) || !(w_box == P("x1"))) c.fail("dualizing classes");
  MultiPoly one = MultiPoly::constant(u, 1);
  MultiPoly oneG2 = pow_trunc(one - box_G(1, 4, u), 2, 4);
  TruncatedX e0 = rho_projective(mul_trunc(oneG2, weak_J(Partition({0}).trimmed(), 1, 4, u), 4), 2);
  TruncatedX e1 = rho_projective(mul_trunc(oneG2, weak_J(Partition({1}), 1, 4, u), 4), 2);
  c.cases += 2;
  if (!cmp.same(e0 == P("1 - 2*x1"), true)) c.fail("rho at empty = " + e0.str());
  if (!(e1 == P("x1"))) c.fail("rho at box = " + e1.str());
  if (!(e0 == w_empty) || !(e1 == w_box)) c.fail("evaluations differ from top-y classes");
  return c;
}

// ---------------------------------------------------------------------------
// Suites.

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hecke-relations", "amonomial", "pieri-oracle", "appendix-equiv",
                                              "intertwine", "specializations", "symfunc"};
  return names;
}

inline std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  std::vector<std::function<std::vector<CheckResult>()>> tasks;
  bool fault = opt.inject_fault;
  // One comparator per task; only the first task carries the fault.
  auto armed = [&]() {
    bool f = fault;
    fault = false;
    return f;
  };
  if (suite == "hecke-relations") {
    for (int n = 2; n <= std::min(opt.n_max, 4); ++n) {
      bool f = armed();
      tasks.push_back([n, f, &opt] {
        Comparator cmp(f);
        auto r = check_hecke_relations(n, opt.seed, cmp);
        r.push_back(check_ribbon_word_identity(n, cmp));
        return r;
      });
    }
  } else if (suite == "amonomial") {
    for (const auto& s : settings_upto(opt.n_max, 3)) {
      bool f = armed();
      tasks.push_back([s, f, &opt] {
        Comparator cmp(f);
        return check_hecke_symmetrizer(s, opt.seed, opt.samples, cmp);
      });
    }
  } else if (suite == "pieri-oracle") {
    for (const auto& s : settings_upto(opt.n_max, 3)) {
      bool f = armed();
      tasks.push_back([s, f, &opt] {
        Comparator cmp(f);
        std::vector<CheckResult> r{check_pieri_oracle(s, cmp)};
        auto rep = check_representation(s, opt.seed, cmp);
        r.insert(r.end(), rep.begin(), rep.end());
        return r;
      });
    }
  } else if (suite == "appendix-equiv") {
    for (const auto& s : settings_upto(opt.n_max, 3)) {
      bool f = armed();
      tasks.push_back([s, f] {
        Comparator cmp(f);
        return check_appendix(s, cmp);
      });
    }
  } else if (suite == "intertwine") {
    for (const auto& s : settings_upto(std::max(opt.n_max, 2))) {
      bool f = armed();
      tasks.push_back([s, f] {
        Comparator cmp(f);
        return check_intertwining(s, cmp);
      });
    }
  } else if (suite == "specializations") {
    for (const auto& s : settings_upto(opt.n_max, 3)) {
      bool f = armed();
      tasks.push_back([s, f] {
        Comparator cmp(f);
        auto r = check_specializations(s, cmp);
        r.push_back(check_grothendieck_pieri(s, cmp));
        return r;
      });
    }
  } else if (suite == "symfunc") {
    bool f = armed();
    tasks.push_back([f, &opt] {
      Comparator cmp(f);
      auto r = check_symfunc_basics(opt.seed, cmp);
      r.push_back(check_projective_line(cmp));
      return r;
    });
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}, {4, 2}}) {
      if (n > std::max(opt.n_max, 2)) continue;
      tasks.push_back([n, k] {
        Comparator cmp(false);
        return check_theorem_E(GrassSetting(n, k), cmp);
      });
    }
  } else {
    throw domain_error("unknown suite " + suite);
  }
  return run_tasks(tasks, opt.workers);
}

}  // namespace ribbon
