#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/params.hpp"
#include "ribbon/poly.hpp"
#include "ribbon/shapes.hpp"

namespace ribbon {

// Sum of coefficient * (class indexed by partition).  No zero entries.
using GrassVector = std::map<Partition, MultiPoly>;

inline void accumulate(GrassVector& v, const Partition& key, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto it = v.find(key);
  if (it == v.end()) {
    v.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

inline GrassVector operator+(GrassVector a, const GrassVector& b) {
  for (const auto& [k, c] : b) accumulate(a, k, c);
  return a;
}
inline GrassVector operator-(GrassVector a, const GrassVector& b) {
  for (const auto& [k, c] : b) accumulate(a, k, -c);
  return a;
}
inline GrassVector scale(const GrassVector& a, const MultiPoly& c) {
  GrassVector r;
  for (const auto& [k, v] : a) accumulate(r, k, v * c);
  return r;
}
inline GrassVector basis_vector(const Partition& lam, VarUniverse u) {
  return GrassVector{{lam, MultiPoly::constant(u, 1)}};
}
inline GrassVector substitute(const GrassVector& a, const Substitution& s) {
  GrassVector r;
  for (const auto& [k, v] : a) accumulate(r, k, v.substitute(s));
  return r;
}
inline GrassVector specialize(const GrassVector& a, const ParamSpec& s) {
  GrassVector r;
  for (const auto& [k, v] : a) accumulate(r, k, specialize(v, s));
  return r;
}

// t_i -> t_{n+1-i} (and x likewise).
inline MultiPoly weyl_twist(const MultiPoly& f) {
  VarUniverse u = f.universe();
  return f.rename([u](int v) {
    if (u.is_t(v)) return u.t(u.n + 1 - u.index_of(v));
    if (u.is_x(v)) return u.x(u.n + 1 - u.index_of(v));
    return v;
  });
}

// The 2x2x2 cube of ribbon operators.
enum class Anchor { Head, Tail };
enum class Valued { Head, Tail };
enum class Direction { Adding, Deleting };

struct RibbonOpKind {
  Anchor anchor;
  Valued value;
  Direction dir;
  friend bool operator==(const RibbonOpKind&, const RibbonOpKind&) = default;
};

namespace op {
inline constexpr RibbonOpKind fhead{Anchor::Head, Valued::Head, Direction::Adding};
inline constexpr RibbonOpKind xfhead{Anchor::Head, Valued::Tail, Direction::Adding};
inline constexpr RibbonOpKind xftail{Anchor::Tail, Valued::Head, Direction::Adding};
inline constexpr RibbonOpKind ftail{Anchor::Tail, Valued::Tail, Direction::Adding};
inline constexpr RibbonOpKind dual(RibbonOpKind k) { return {k.anchor, k.value, Direction::Deleting}; }
}  // namespace op

inline std::string op_name(RibbonOpKind k) {
  std::string s = k.value == Valued::Tail ? (k.anchor == Anchor::Head ? "xfhead" : "ftail")
                                          : (k.anchor == Anchor::Head ? "fhead" : "xftail");
  return k.dir == Direction::Deleting ? "dual-" + s : s;
}

// Everything an operator application needs.  With use_x the coefficient
// variables are x_j instead of t_j (the Hecke-side operators).
struct OpContext {
  GrassSetting s;
  VarUniverse u;
  HeckeParams params;
  bool use_x = false;

  OpContext(GrassSetting s_, HeckeParams p, bool x = false)
      : s(s_), u{s_.n}, params(std::move(p)), use_x(x) {}
  static OpContext symbolic(GrassSetting s, bool x = false) {
    return OpContext(s, HeckeParams::symbolic(VarUniverse{s.n}), x);
  }

  MultiPoly value_var(int j) const { return MultiPoly::var(u, use_x ? u.x(j) : u.t(j)); }

  // (hbar - (p-q) v_j) p^{ht-1} q^{wd-1}
  MultiPoly ribbon_coeff(int j, int ht, int wd) const {
    return (params.hbar - params.p_minus_q() * value_var(j)) * params.p.pow(ht - 1) *
           params.q.pow(wd - 1);
  }
};

inline GrassVector apply_op(const OpContext& ctx, RibbonOpKind kind, int i, const GrassVector& v) {
  const GrassSetting& s = ctx.s;
  if (i < 1 || i > s.k) throw domain_error("row index out of range");
  GrassVector out;
  for (const auto& [lam, c] : v) {
    accumulate(out, lam, c * ctx.value_var(lam[i] + s.k + 1 - i));
    auto ribbons = kind.dir == Direction::Adding ? addable_ribbons(lam, s) : removable_ribbons(lam, s);
    for (const auto& rb : ribbons) {
      int row = kind.anchor == Anchor::Head ? rb.head_row : rb.tail_row;
      if (row != i) continue;
      int j = kind.value == Valued::Head ? rb.head_value : rb.tail_value;
      const Partition& target = kind.dir == Direction::Adding ? rb.outer : rb.inner;
      accumulate(out, target, c * ctx.ribbon_coeff(j, rb.ht, rb.wd));
    }
  }
  return out;
}

// Sum over i_1 < ... < i_r of the operator chains.  Adding operators apply
// op_{i_1} first; deleting operators apply op_{i_r} first.
inline GrassVector chain_sum(const OpContext& ctx, RibbonOpKind kind, const GrassVector& v, int r) {
  int k = ctx.s.k;
  if (r < 0 || r > k) throw domain_error("r must lie in 0..k");
  std::vector<GrassVector> level(r + 1);
  level[0] = v;
  auto step = [&](int row) {
    for (int m = r; m >= 1; --m) {
      if (level[m - 1].empty()) continue;
      level[m] = level[m] + apply_op(ctx, kind, row, level[m - 1]);
    }
  };
  if (kind.dir == Direction::Adding) {
    for (int row = 1; row <= k; ++row) step(row);
  } else {
    for (int row = k; row >= 1; --row) step(row);
  }
  return level[r];
}

// One explicit chain: rows applied in the given order.
inline GrassVector apply_chain(const OpContext& ctx, RibbonOpKind kind, const std::vector<int>& rows,
                               GrassVector v) {
  for (int row : rows) v = apply_op(ctx, kind, row, v);
  return v;
}

enum class ClassKind {
  Schubert,
  IdealSheaf,
  StructureSheaf,
  CSM,
  SegreMacPherson,
  MotivicChern,
  SegreMotivic,
  DualizingSheaf
};

struct ClassKindInfo {
  ClassKind kind;
  const char* name;     // CLI / JSON tag
  const char* p;
  const char* q;
  const char* hbar;
  RibbonOpKind op;
  bool t_zero;
  bool segre;  // dual partner of a head-valued kind
};

inline const std::array<ClassKindInfo, 8>& class_kinds() {
  static const std::array<ClassKindInfo, 8> table{{
      {ClassKind::Schubert, "S", "0", "0", "1", op::fhead, false, false},
      {ClassKind::IdealSheaf, "I", "1", "0", "1", op::fhead, false, false},
      {ClassKind::StructureSheaf, "O", "1", "0", "1", op::xfhead, false, true},
      {ClassKind::CSM, "CSM", "1", "1", "1", op::fhead, false, false},
      {ClassKind::SegreMacPherson, "SM", "1", "1", "1", op::xfhead, false, true},
      {ClassKind::MotivicChern, "MC", "1", "-y", "1+y", op::fhead, false, false},
      {ClassKind::SegreMotivic, "SMC", "1", "-y", "1+y", op::xfhead, false, true},
      {ClassKind::DualizingSheaf, "omega", "0", "-1", "1", op::fhead, true, false},
  }};
  return table;
}

inline const ClassKindInfo& info(ClassKind k) { return class_kinds()[static_cast<int>(k)]; }

inline std::optional<ClassKind> parse_class_kind(const std::string& s) {
  for (const auto& e : class_kinds())
    if (s == e.name) return e.kind;
  return std::nullopt;
}

inline HeckeParams kind_params(ClassKind k, VarUniverse u) {
  const auto& e = info(k);
  return HeckeParams::parse(u, e.p, e.q, e.hbar);
}

// Substitution taking symbolic (p,q,hbar) to the kind's values, and t to 0
// for non-equivariant kinds.
inline Substitution kind_substitution(ClassKind k, VarUniverse u) {
  Substitution s = kind_params(k, u).substitution(u);
  if (info(k).t_zero)
    for (int i = 1; i <= u.n; ++i) s.value[u.t(i)] = MultiPoly(u);
  return s;
}

// c_r(V^dual) times the class of lambda: chains of the kind's operator with
// symbolic parameters, specialized at the end.
inline GrassVector pieri(ClassKind kind, const Partition& lam, int r, const GrassSetting& s) {
  lam.require_fits(s);
  if (r < 0 || r > s.k) throw domain_error("r must lie in 0..k");
  OpContext ctx = OpContext::symbolic(s);
  VarUniverse u{s.n};
  GrassVector raw = chain_sum(ctx, info(kind).op, basis_vector(lam, u), r);
  return substitute(raw, kind_substitution(kind, u));
}

// Same expansion with the kind substitution applied before chaining.
inline GrassVector pieri_specialized(ClassKind kind, const Partition& lam, int r, const GrassSetting& s) {
  lam.require_fits(s);
  VarUniverse u{s.n};
  OpContext ctx(s, kind_params(kind, u));
  GrassVector raw = chain_sum(ctx, info(kind).op, basis_vector(lam, u), r);
  if (!info(kind).t_zero) return raw;
  return substitute(raw, kind_substitution(kind, u));
}

// Opposite (X-)cells.  Direct route: Sum_I  mu -> ftail_{i_r} -> ... -> ftail_{i_1}
// with deleting operators, under the kind's parameters.
inline GrassVector pieri_opposite_direct(ClassKind kind, const Partition& mu, int r, const GrassSetting& s) {
  mu.require_fits(s);
  OpContext ctx = OpContext::symbolic(s);
  VarUniverse u{s.n};
  GrassVector raw = chain_sum(ctx, op::dual(op::ftail), basis_vector(mu, u), r);
  return substitute(raw, kind_substitution(kind, u));
}

// Twist route: take the Y-cell expansion of the dual partition, apply
// t_i -> t_{n+1-i}, and relabel partitions by their duals.
inline GrassVector pieri_opposite_twisted(ClassKind kind, const Partition& mu, int r, const GrassSetting& s) {
  GrassVector y = pieri(kind, dual_partition(mu, s), r, s);
  GrassVector out;
  for (const auto& [nu, c] : y) accumulate(out, dual_partition(nu, s), weyl_twist(c));
  return out;
}

// Refined operator v_{ab}: a < b picks the unique ribbon with tail value a
// and head value b; a == b is the diagonal term when a is a row value.
inline GrassVector refined_op(const OpContext& ctx, int a, int b, const GrassVector& v) {
  if (a > b) throw domain_error("refined operator needs a <= b");
  const GrassSetting& s = ctx.s;
  GrassVector out;
  for (const auto& [lam, c] : v) {
    if (a == b) {
      for (int i = 1; i <= s.k; ++i)
        if (lam[i] + s.k + 1 - i == a) accumulate(out, lam, c * ctx.value_var(a));
      continue;
    }
    for (const auto& rb : addable_ribbons(lam, s)) {
      if (rb.tail_value == a && rb.head_value == b) {
        accumulate(out, rb.outer, c * ctx.ribbon_coeff(b, rb.ht, rb.wd));
        break;
      }
    }
  }
  return out;
}

// Interval of head values b belonging to ribbons (or the diagonal) with
// head in row i: [lambda_i + k + 1 - i, lambda_{i-1} + k + 1 - i].
inline std::pair<int, int> head_value_range(const Partition& lam, int i, const GrassSetting& s) {
  int lo = lam[i] + s.k + 1 - i;
  int hi = (i == 1 ? s.width() : lam[i - 1]) + s.k + 1 - i;
  return {lo, hi};
}

// Non-equivariant dualizing-sheaf rule: sum over mu whose skew shape over
// lambda has exactly r nonempty rows, sign (-1)^{|mu/lambda| - r}.
inline GrassVector omega_pieri(const Partition& lam, int r, const GrassSetting& s) {
  lam.require_fits(s);
  if (r < 0 || r > s.k) throw domain_error("r must lie in 0..k");
  VarUniverse u{s.n};
  GrassVector out;
  for (const auto& mu : partitions_in(s)) {
    if (!mu.contains(lam) || skew_nonempty_rows(lam, mu) != r) continue;
    int sign = ((mu.size() - lam.size() - r) % 2 == 0) ? 1 : -1;
    accumulate(out, mu, MultiPoly::constant(u, sign));
  }
  return out;
}

// Coefficient matrix M[lambda][mu] of an operator given per basis vector.
template <class F>
std::map<Partition, GrassVector> operator_matrix(const GrassSetting& s, F&& f) {
  std::map<Partition, GrassVector> m;
  for (const auto& lam : partitions_in(s)) m[lam] = f(lam);
  return m;
}

inline GrassVector apply_matrix(const std::map<Partition, GrassVector>& m, const GrassVector& v) {
  GrassVector out;
  for (const auto& [lam, c] : v) {
    auto it = m.find(lam);
    if (it == m.end()) throw structural_error("matrix lacks row " + lam.str());
    for (const auto& [mu, a] : it->second) accumulate(out, mu, c * a);
  }
  return out;
}

}  // namespace ribbon
