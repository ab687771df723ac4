#pragma once

#include <map>
#include <string>
#include <vector>

#include "ribbon/errors.hpp"
#include "ribbon/params.hpp"
#include "ribbon/poly.hpp"
#include "ribbon/ribbonops.hpp"
#include "ribbon/shapes.hpp"

namespace ribbon {

enum class Basis { T, Tbar };

// Normal-ordered element sum_w f_w(x) X_w of the affine Hecke algebra, with
// X = T or Tbar and polynomial coefficients written on the left.
struct HeckeElement {
  int n = 0;
  Basis basis = Basis::Tbar;
  std::map<Permutation, MultiPoly> terms;

  HeckeElement() = default;
  HeckeElement(int n_, Basis b) : n(n_), basis(b) {}

  static HeckeElement basis_element(const Permutation& w, Basis b) {
    HeckeElement h(w.n(), b);
    h.terms.emplace(w, MultiPoly::constant(VarUniverse{w.n()}, 1));
    return h;
  }
  static HeckeElement one(int n, Basis b) { return basis_element(Permutation::identity(n), b); }
  static HeckeElement poly(int n, const MultiPoly& f, Basis b = Basis::Tbar) {
    HeckeElement h(n, b);
    h.add(Permutation::identity(n), f);
    return h;
  }

  void add(const Permutation& w, const MultiPoly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
  bool is_zero() const { return terms.empty(); }
  MultiPoly coefficient(const Permutation& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? MultiPoly(VarUniverse{n}) : it->second;
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    check(o);
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    check(o);
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  // Left multiplication by a polynomial (x's stay on the left).
  friend HeckeElement operator*(const MultiPoly& f, const HeckeElement& h) {
    HeckeElement r(h.n, h.basis);
    for (const auto& [w, c] : h.terms) r.add(w, f * c);
    return r;
  }
  HeckeElement substitute(const Substitution& s) const {
    HeckeElement r(n, basis);
    for (const auto& [w, c] : terms) r.add(w, c.substitute(s));
    return r;
  }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.n == b.n && a.basis == b.basis && a.terms == b.terms;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    const char* sym = basis == Basis::T ? "T" : "Tbar";
    for (const auto& [w, c] : terms) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")*" + sym + "[" + w.str() + "]";
    }
    return s;
  }

 private:
  void check(const HeckeElement& o) const {
    if (o.n != n || o.basis != basis) throw structural_error("Hecke elements in different settings");
  }
};

// Exact divided difference (f - s_i f)/(x_i - x_{i+1}), monomial by monomial.
inline MultiPoly divided_difference(const MultiPoly& f, int i) {
  VarUniverse u = f.universe();
  int vi = u.x(i), vj = u.x(i + 1);
  std::vector<MultiPoly::Term> out;
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    int a = rest.take(vi), b = rest.take(vj);
    if (a == b) continue;
    bool neg = a < b;
    int hi = neg ? b : a, lo = neg ? a : b;
    Rational cc = neg ? -c : c;
    for (int j = 0; j < hi - lo; ++j)
      out.push_back({rest * Monomial::var(vi, hi - 1 - j) * Monomial::var(vj, lo + j), cc});
  }
  return MultiPoly::from_terms(u, std::move(out));
}

inline MultiPoly swap_x(const MultiPoly& f, int i) {
  VarUniverse u = f.universe();
  int vi = u.x(i), vj = u.x(i + 1);
  return f.rename([=](int v) { return v == vi ? vj : v == vj ? vi : v; });
}

// Multiplication in the affine Hecke algebra for fixed parameter values.
class HeckeAlgebra {
 public:
  HeckeAlgebra(int n, HeckeParams params)
      : n_(n), u_{n}, prm_(std::move(params)), pmq_(prm_.p - prm_.q), pq_(prm_.p * prm_.q) {}
  static HeckeAlgebra symbolic(int n) { return HeckeAlgebra(n, HeckeParams::symbolic(VarUniverse{n})); }

  int n() const { return n_; }
  VarUniverse universe() const { return u_; }
  const HeckeParams& params() const { return prm_; }

  // T_i * h (basis T) or Tbar_i * h (basis Tbar), using
  //   Tbar_i f = (s_i f) Tbar_i + (hbar - (p-q) x_{i+1}) d_i f,
  //   T_i f    = (s_i f) T_i    + (hbar - (p-q) x_i)     d_i f.
  HeckeElement gen_times(int i, const HeckeElement& h) const {
    if (i < 1 || i >= n_) throw domain_error("generator index out of range");
    bool bar = h.basis == Basis::Tbar;
    HeckeElement r(n_, h.basis);
    MultiPoly shift = prm_.hbar - pmq_ * MultiPoly::var(u_, u_.x(bar ? i + 1 : i));
    for (const auto& [w, f] : h.terms) {
      MultiPoly sf = swap_x(f, i);
      Permutation sw = w.s_times(i);
      if (!w.left_descent(i)) {
        r.add(sw, sf);
      } else {
        r.add(w, (bar ? pmq_ : -pmq_) * sf);
        r.add(sw, pq_ * sf);
      }
      MultiPoly df = divided_difference(f, i);
      if (!df.is_zero()) r.add(w, shift * df);
    }
    return r;
  }

  // X_{i_1} ... X_{i_l} * h for a word, rightmost letter first.
  HeckeElement word_times(const std::vector<int>& word, HeckeElement h) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) h = gen_times(*it, h);
    return h;
  }
  HeckeElement basis_times(const Permutation& w, const HeckeElement& h) const {
    return word_times(w.reduced_word(), h);
  }

  // h * f rewritten in normal order.
  HeckeElement times_poly(const HeckeElement& h, const MultiPoly& f) const {
    HeckeElement r(n_, h.basis);
    HeckeElement start = HeckeElement::poly(n_, f, h.basis);
    for (const auto& [w, c] : h.terms) r += c * basis_times(w, start);
    return r;
  }
  HeckeElement times_x(const HeckeElement& h, int j) const {
    return times_poly(h, MultiPoly::var(u_, u_.x(j)));
  }

  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const {
    if (a.basis != b.basis) throw structural_error("product of elements in different bases");
    HeckeElement r(n_, a.basis);
    for (const auto& [w, c] : a.terms) r += c * basis_times(w, b);
    return r;
  }

  // Change of basis via Tbar_i = T_i + (p-q).
  HeckeElement to_basis(const HeckeElement& h, Basis target) const {
    if (h.basis == target) return h;
    HeckeElement r(n_, target);
    MultiPoly sh = target == Basis::T ? pmq_ : -pmq_;
    for (const auto& [w, c] : h.terms) {
      HeckeElement e = HeckeElement::one(n_, target);
      auto word = w.reduced_word();
      for (auto it = word.rbegin(); it != word.rend(); ++it) e = gen_times(*it, e) + sh * e;
      r += c * e;
    }
    return r;
  }

  // [m] evaluated at the current parameters.
  MultiPoly qnum(int m) const {
    MultiPoly r(u_);
    for (int i = 0; i < m; ++i) r += prm_.p.pow(i) * prm_.q.pow(m - 1 - i);
    return r;
  }
  MultiPoly qfact(int m) const {
    MultiPoly r = MultiPoly::constant(u_, 1);
    for (int i = 2; i <= m; ++i) r *= qnum(i);
    return r;
  }

 private:
  int n_;
  VarUniverse u_;
  HeckeParams prm_;
  MultiPoly pmq_, pq_;
};

inline int parabolic_d(const GrassSetting& s) { return s.k * (s.k - 1) / 2 + (s.n - s.k) * (s.n - s.k - 1) / 2; }

// [k]![n-k]! * Sigma = sum_v q^{d - l(v)} Tbar_v.
inline HeckeElement sigma_cleared(const HeckeAlgebra& H, const GrassSetting& s) {
  HeckeElement r(s.n, Basis::Tbar);
  int d = parabolic_d(s);
  for (const auto& v : parabolic_subgroup(s))
    r.add(v, H.params().q.pow(d - v.length()));
  return r;
}

inline MultiPoly sigma_normalizer(const HeckeAlgebra& H, const GrassSetting& s) {
  return H.qfact(s.k) * H.qfact(s.n - s.k);
}

// Nondegeneracy for symmetrizer work: q != 0, p != q, [m] != 0 for m <= max(k, n-k).
inline void require_nondegenerate(const HeckeAlgebra& H, const GrassSetting& s) {
  const auto& P = H.params();
  if (!P.p.is_constant() || !P.q.is_constant())
    throw precondition_error("symmetrizer needs rational p and q (or cleared mode)");
  if (P.q.is_zero()) throw precondition_error("degenerate parameters: q = 0");
  if (P.p == P.q) throw precondition_error("degenerate parameters: p = q");
  for (int m = 1; m <= std::max(s.k, s.n - s.k); ++m)
    if (H.qnum(m).is_zero()) throw precondition_error("degenerate parameters: [" + std::to_string(m) + "] = 0");
}

inline HeckeElement sigma(const HeckeAlgebra& H, const GrassSetting& s) {
  require_nondegenerate(H, s);
  Rational inv = sigma_normalizer(H, s).constant_term().inverse();
  return MultiPoly::constant(VarUniverse{s.n}, inv) * sigma_cleared(H, s);
}

// Pi = sum_v p^{d - l(v)} T_v.
inline HeckeElement pi_symmetrizer(const HeckeAlgebra& H, const GrassSetting& s) {
  HeckeElement r(s.n, Basis::T);
  int d = parabolic_d(s);
  for (const auto& v : parabolic_subgroup(s))
    r.add(v, H.params().p.pow(d - v.length()));
  return r;
}

// Tbar_lambda = Tbar_{w_lambda} Sigma, via the column word.
inline HeckeElement t_lambda(const HeckeAlgebra& H, const GrassSetting& s, const Partition& lam,
                             const HeckeElement& sig) {
  return H.word_times(column_word(lam, s), sig);
}

// Memo of Tbar_u * E for a fixed right factor E, built from shorter u.
class LeftMultiplesCache {
 public:
  LeftMultiplesCache(const HeckeAlgebra& H, HeckeElement right) : H_(H), right_(std::move(right)) {}

  const HeckeElement& get(const Permutation& u) {
    auto it = memo_.find(u);
    if (it != memo_.end()) return it->second;
    HeckeElement v;
    if (u == Permutation::identity(u.n())) {
      v = right_;
    } else {
      int i = 1;
      while (!u.left_descent(i)) ++i;
      v = H_.gen_times(i, get(u.s_times(i)));
    }
    return memo_.emplace(u, std::move(v)).first->second;
  }

  // (sum f_u Tbar_u) * E.
  HeckeElement apply(const HeckeElement& h) {
    HeckeElement r(h.n, h.basis);
    for (const auto& [u, c] : h.terms) r += c * get(u);
    return r;
  }

 private:
  const HeckeAlgebra& H_;
  HeckeElement right_;
  std::map<Permutation, HeckeElement> memo_;
};

// Monomial x_{i_1} ... x_{i_r}.
inline MultiPoly x_monomial(VarUniverse u, const std::vector<int>& I) {
  MultiPoly m = MultiPoly::constant(u, 1);
  for (int i : I) m *= MultiPoly::var(u, u.x(i));
  return m;
}

// Left side: Tbar_{w_mu} x_I Sigma, normal ordered.
inline HeckeElement amonomial_lhs(const HeckeAlgebra& H, const GrassSetting& s, const Partition& mu,
                                  const std::vector<int>& I, LeftMultiplesCache& sigma_cache) {
  HeckeElement e = HeckeElement::poly(s.n, x_monomial(H.universe(), I));
  e = H.word_times(column_word(mu, s), e);
  return sigma_cache.apply(e);
}

// Hecke-side deleting operators with x-coefficients:
// Tbar_mu -> [k+1-i_1] -> ... -> [k+1-i_r], as polynomial multiples of Tbar_lambda.
inline GrassVector amonomial_grass(const HeckeAlgebra& H, const GrassSetting& s, const Partition& mu,
                                   const std::vector<int>& I) {
  OpContext ctx(s, H.params(), true);
  GrassVector v = basis_vector(mu, H.universe());
  for (int i : I) v = apply_op(ctx, op::dual(op::fhead), s.k + 1 - i, v);
  return v;
}

inline HeckeElement expand_grass(const HeckeAlgebra& H, const GrassSetting& s, const GrassVector& v,
                                 const HeckeElement& sig) {
  HeckeElement r(s.n, Basis::Tbar);
  for (const auto& [lam, c] : v) r += c * t_lambda(H, s, lam, sig);
  return r;
}

inline HeckeElement amonomial_rhs(const HeckeAlgebra& H, const GrassSetting& s, const Partition& mu,
                                  const std::vector<int>& I, const HeckeElement& sig) {
  return expand_grass(H, s, amonomial_grass(H, s, mu, I), sig);
}

// All r-subsets of {1..k}, increasing.
inline std::vector<std::vector<int>> index_sets(int k, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= k; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// e_r(x_1, ..., x_m).
inline MultiPoly elementary_x(VarUniverse u, int r, int m) {
  MultiPoly e(u);
  for (const auto& I : index_sets(m, r)) e += x_monomial(u, I);
  return e;
}

}  // namespace ribbon
