#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "ribbon/errors.hpp"
#include "ribbon/hecke.hpp"
#include "ribbon/params.hpp"
#include "ribbon/poly.hpp"
#include "ribbon/ribbonops.hpp"
#include "ribbon/shapes.hpp"

namespace ribbon {

// Sum of coefficient * Y_w over permutations.  No zero entries.
using FlagClassVector = std::map<Permutation, MultiPoly>;

inline void accumulate(FlagClassVector& v, const Permutation& w, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto it = v.find(w);
  if (it == v.end()) {
    v.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

inline MultiPoly x_to_t(const MultiPoly& f) {
  VarUniverse u = f.universe();
  return f.rename([u](int v) { return u.is_x(v) ? u.t(u.index_of(v)) : v; });
}

// The module with basis Y_w on which T_i and x_i act as the transpose of
// normal ordering.  ev(Y_w) = [w == id].  The x-action matrices are built
// lazily, one variable at a time, and cached; an instance is not meant to be
// shared between threads.
class SchubertRep {
 public:
  SchubertRep(int n, HeckeParams params) : H_(n, std::move(params)), n_(n), u_{n} {}

  int n() const { return n_; }
  const HeckeAlgebra& algebra() const { return H_; }

  FlagClassVector act_T(int i, const FlagClassVector& v) const {
    if (i < 1 || i >= n_) throw domain_error("generator index out of range");
    FlagClassVector r;
    MultiPoly pmq = H_.params().p_minus_q(), pq = H_.params().pq();
    for (const auto& [w, c] : v) {
      Permutation ws = w.times_s(i);
      if (w.right_descent(i)) {
        accumulate(r, ws, c);
      } else {
        accumulate(r, w, -(pmq * c));
        accumulate(r, ws, pq * c);
      }
    }
    return r;
  }
  FlagClassVector act_Tbar(int i, const FlagClassVector& v) const {
    FlagClassVector r = act_T(i, v);
    MultiPoly pmq = H_.params().p_minus_q();
    for (const auto& [w, c] : v) accumulate(r, w, pmq * c);
    return r;
  }

  FlagClassVector act_x(int i, const FlagClassVector& v) {
    if (i < 1 || i > n_) throw domain_error("variable index out of range");
    const auto& col = x_matrix(i);
    FlagClassVector r;
    for (const auto& [uperm, c] : v) {
      auto it = col.find(uperm);
      if (it == col.end()) continue;
      for (const auto& [w, P] : it->second) accumulate(r, w, P * c);
    }
    return r;
  }

  // f(x) . v for a polynomial f, monomial by monomial.
  FlagClassVector act_poly(const MultiPoly& f, const FlagClassVector& v) {
    FlagClassVector r;
    for (const auto& [m, c] : f.terms()) {
      FlagClassVector cur = v;
      MultiPoly scalar = MultiPoly::constant(u_, c);
      for (const auto& [var, e] : m.entries()) {
        if (u_.is_x(var)) {
          for (int j = 0; j < e; ++j) cur = act_x(u_.index_of(var), cur);
        } else {
          scalar *= MultiPoly::var(u_, var, e);
        }
      }
      for (const auto& [w, a] : cur) accumulate(r, w, scalar * a);
    }
    return r;
  }

  // h . v for a Hecke element in either basis: X_w first, then its coefficient.
  FlagClassVector act(const HeckeElement& h, const FlagClassVector& v) {
    FlagClassVector r;
    for (const auto& [w, f] : h.terms) {
      FlagClassVector cur = v;
      auto word = w.reduced_word();
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = h.basis == Basis::T ? act_T(*it, cur) : act_Tbar(*it, cur);
      for (const auto& [y, c] : act_poly(f, cur)) accumulate(r, y, c);
    }
    return r;
  }

  static MultiPoly ev(const FlagClassVector& v) {
    for (const auto& [w, c] : v)
      if (w == Permutation::identity(w.n())) return c;
    return MultiPoly();
  }

  // Y_lambda = sum over Gr(w) = lambda of p^{l(w) - |lambda|} Y_w.
  FlagClassVector grass_class(const Partition& lam, const GrassSetting& s) const {
    lam.require_fits(s);
    Permutation wl = grassmannian_perm(lam, s);
    FlagClassVector r;
    for (const auto& v : parabolic_subgroup(s)) accumulate(r, wl * v, H_.params().p.pow(v.length()));
    return r;
  }

  FlagClassVector lift(const GrassVector& g, const GrassSetting& s) const {
    FlagClassVector r;
    for (const auto& [lam, c] : g)
      for (const auto& [w, a] : grass_class(lam, s)) accumulate(r, w, c * a);
    return r;
  }

  // Rewrite in the Y_mu basis.  The coefficient of Y_mu is read at w_mu; any
  // leftover means the vector was not S_k x S_{n-k}-invariant.
  GrassVector collapse(const FlagClassVector& v, const GrassSetting& s) const {
    GrassVector out;
    FlagClassVector rest = v;
    for (const auto& mu : partitions_in(s)) {
      auto it = rest.find(grassmannian_perm(mu, s));
      if (it == rest.end()) continue;
      MultiPoly c = it->second;
      accumulate(out, mu, c);
      for (const auto& [w, a] : grass_class(mu, s)) accumulate(rest, w, -(c * a));
    }
    if (!rest.empty())
      throw consistency_error("collapse left a nonzero residue at " + rest.begin()->first.str());
    return out;
  }

  // f . Y_lambda in the Y_mu basis, for f symmetric in each block of x's.
  GrassVector oracle_pieri(const Partition& lam, const MultiPoly& f, const GrassSetting& s) {
    for (int i = 1; i < s.n; ++i)
      if (i != s.k && swap_x(f, i) != f)
        throw precondition_error("polynomial is not symmetric under S_k x S_{n-k}");
    return collapse(act_poly(f, grass_class(lam, s)), s);
  }

  // e_r(x_1..x_k) . Y_lambda via the level recursion over variables.
  GrassVector oracle_elementary(const Partition& lam, int r, const GrassSetting& s) {
    if (r < 0 || r > s.k) throw domain_error("r must lie in 0..k");
    std::vector<FlagClassVector> level(r + 1);
    level[0] = grass_class(lam, s);
    for (int i = 1; i <= s.k; ++i)
      for (int m = std::min(r, i); m >= 1; --m) {
        if (level[m - 1].empty()) continue;
        for (const auto& [w, c] : act_x(i, level[m - 1])) accumulate(level[m], w, c);
      }
    return collapse(level[r], s);
  }

 private:
  using Column = std::map<Permutation, std::vector<std::pair<Permutation, MultiPoly>>>;

  // For fixed i: u -> [(w, P_{u,w}(t))] where Tbar_w x_i = sum_u P_{u,w}(x) Tbar_u.
  const Column& x_matrix(int i) {
    auto it = xmat_.find(i);
    if (it != xmat_.end()) return it->second;
    std::map<Permutation, HeckeElement> no;
    Permutation id = Permutation::identity(n_);
    no.emplace(id, HeckeElement::poly(n_, MultiPoly::var(u_, u_.x(i))));
    for (const auto& w : by_length()) {
      if (w == id) continue;
      int j = 1;
      while (!w.left_descent(j)) ++j;
      no.emplace(w, H_.gen_times(j, no.at(w.s_times(j))));
    }
    Column col;
    for (const auto& [w, e] : no)
      for (const auto& [uperm, P] : e.terms) col[uperm].push_back({w, x_to_t(P)});
    return xmat_.emplace(i, std::move(col)).first->second;
  }

  const std::vector<Permutation>& by_length() {
    if (sorted_.empty()) {
      sorted_ = all_permutations(n_);
      std::stable_sort(sorted_.begin(), sorted_.end(),
                       [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
    }
    return sorted_;
  }

  HeckeAlgebra H_;
  int n_;
  VarUniverse u_;
  std::map<int, Column> xmat_;
  std::vector<Permutation> sorted_;
};

// Oracle for c_r(V^dual) acting on a class kind.  Head-valued kinds are read
// off the representation at the kind's parameters.  Tail-valued ones are the
// duals of their head-valued partners: transpose the partner's matrix on dual
// partitions and apply t_i -> t_{n+1-i}.
class PieriOracle {
 public:
  PieriOracle(const GrassSetting& s) : s_(s), u_{s.n} {}

  GrassVector run(ClassKind kind, const Partition& lam, int r) {
    const auto& e = info(kind);
    if (!e.segre) {
      GrassVector g = rep(kind).oracle_elementary(lam, r, s_);
      return e.t_zero ? substitute(g, kind_substitution(kind, u_)) : g;
    }
    ClassKind partner = head_partner(kind);
    Partition lbar = dual_partition(lam, s_);
    GrassVector out;
    for (const auto& mu : partitions_in(s_)) {
      GrassVector g = rep(partner).oracle_elementary(dual_partition(mu, s_), r, s_);
      auto it = g.find(lbar);
      if (it != g.end()) accumulate(out, mu, weyl_twist(it->second));
    }
    return out;
  }

  static ClassKind head_partner(ClassKind k) {
    switch (k) {
      case ClassKind::StructureSheaf: return ClassKind::IdealSheaf;
      case ClassKind::SegreMacPherson: return ClassKind::CSM;
      case ClassKind::SegreMotivic: return ClassKind::MotivicChern;
      default: return k;
    }
  }

 private:
  SchubertRep& rep(ClassKind k) {
    auto it = reps_.find(k);
    if (it == reps_.end()) it = reps_.emplace(k, SchubertRep(s_.n, kind_params(k, u_))).first;
    return it->second;
  }

  GrassSetting s_;
  VarUniverse u_;
  std::map<ClassKind, SchubertRep> reps_;
};

}  // namespace ribbon
