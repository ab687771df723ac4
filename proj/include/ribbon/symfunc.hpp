#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ribbon/errors.hpp"
#include "ribbon/poly.hpp"
#include "ribbon/ribbonops.hpp"
#include "ribbon/shapes.hpp"

namespace ribbon {

// Drops every term whose total degree exceeds D.
inline MultiPoly truncate(const MultiPoly& f, int D) {
  std::vector<MultiPoly::Term> keep;
  for (const auto& t : f.terms())
    if (t.first.degree() <= D) keep.push_back(t);
  return MultiPoly::from_terms(f.universe(), std::move(keep));
}

inline MultiPoly mul_trunc(const MultiPoly& a, const MultiPoly& b, int D) {
  std::vector<MultiPoly::Term> out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (ma.degree() + mb.degree() <= D) out.push_back({ma * mb, ca * cb});
  return MultiPoly::from_terms(a.universe(), std::move(out));
}

inline MultiPoly pow_trunc(const MultiPoly& a, int e, int D) {
  MultiPoly r = MultiPoly::constant(a.universe(), 1);
  for (int i = 0; i < e; ++i) r = mul_trunc(r, a, D);
  return r;
}

// Element of the degree-D truncation of the symmetric functions in m
// variables, written in the e-basis.  Keys are e-index multisets in
// decreasing order; e_r = 0 for r > m.  lossy records that a product dropped
// terms above degree D.
struct SymFunc {
  int D = 0;
  int m = 0;
  bool lossy = false;
  std::map<std::vector<int>, Rational> terms;

  SymFunc() = default;
  SymFunc(int D_, int m_) : D(D_), m(m_) {}

  static SymFunc one(int D, int m) {
    SymFunc f(D, m);
    f.terms[{}] = Rational(1);
    return f;
  }
  static SymFunc e(int r, int D, int m) {
    SymFunc f(D, m);
    if (r == 0) return one(D, m);
    if (r <= m && r <= D) f.terms[{r}] = Rational(1);
    return f;
  }
  static int degree(const std::vector<int>& key) {
    int d = 0;
    for (int r : key) d += r;
    return d;
  }

  void add(const std::vector<int>& key, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }

  friend SymFunc operator+(SymFunc a, const SymFunc& b) {
    a.check(b);
    for (const auto& [k, c] : b.terms) a.add(k, c);
    a.lossy = a.lossy || b.lossy;
    return a;
  }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) {
    a.check(b);
    for (const auto& [k, c] : b.terms) a.add(k, -c);
    a.lossy = a.lossy || b.lossy;
    return a;
  }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    a.check(b);
    SymFunc r(a.D, a.m);
    r.lossy = a.lossy || b.lossy;
    for (const auto& [ka, ca] : a.terms)
      for (const auto& [kb, cb] : b.terms) {
        if (degree(ka) + degree(kb) > a.D) {
          r.lossy = true;
          continue;
        }
        std::vector<int> k = ka;
        k.insert(k.end(), kb.begin(), kb.end());
        std::sort(k.rbegin(), k.rend());
        r.add(k, ca * cb);
      }
    return r;
  }
  SymFunc scaled(const Rational& c) const {
    SymFunc r(D, m);
    r.lossy = lossy;
    for (const auto& [k, v] : terms) r.add(k, v * c);
    return r;
  }
  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.D == b.D && a.m == b.m && a.terms == b.terms;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms) {
      if (!s.empty()) s += " + ";
      s += c.str();
      for (int r : k) s += "*e" + std::to_string(r);
    }
    return s;
  }

 private:
  void check(const SymFunc& o) const {
    if (o.D != D || o.m != m) throw structural_error("symmetric functions with different truncations");
  }
};

// e_r(x_1..x_m) as a polynomial.
inline MultiPoly elementary_poly(VarUniverse u, int r, int m) {
  if (r == 0) return MultiPoly::constant(u, 1);
  std::vector<std::vector<MultiPoly>> E(m + 1, std::vector<MultiPoly>(r + 1, MultiPoly(u)));
  for (int j = 0; j <= m; ++j) E[j][0] = MultiPoly::constant(u, 1);
  for (int j = 1; j <= m; ++j)
    for (int i = 1; i <= std::min(r, j); ++i)
      E[j][i] = E[j - 1][i] + MultiPoly::var(u, u.x(j)) * E[j - 1][i - 1];
  return E[m][r];
}

inline MultiPoly to_poly(const SymFunc& f, VarUniverse u) {
  if (f.m > u.n) throw structural_error("variable universe too small");
  std::vector<MultiPoly> e;
  for (int r = 0; r <= f.m; ++r) e.push_back(elementary_poly(u, r, f.m));
  MultiPoly out(u);
  for (const auto& [k, c] : f.terms) {
    MultiPoly t = MultiPoly::constant(u, c);
    for (int r : k) t *= e[r];
    out += t;
  }
  return out;
}

// Symmetric polynomial in x_1..x_m (degree <= D) to the e-basis, by peeling
// off lex-leading monomials x^a with e_1^{a_1-a_2} ... e_m^{a_m}.
inline SymFunc from_symmetric_poly(const MultiPoly& f, int m, int D) {
  VarUniverse u = f.universe();
  if (m > u.n) throw structural_error("variable universe too small");
  std::vector<MultiPoly> e;
  for (int r = 0; r <= m; ++r) e.push_back(elementary_poly(u, r, m));
  SymFunc out(D, m);
  MultiPoly rest = truncate(f, D);
  while (!rest.is_zero()) {
    const auto& [mono, c] = rest.terms().front();
    std::vector<int> a(m + 2, 0);
    for (const auto& [v, ex] : mono.entries()) {
      if (!u.is_x(v) || u.index_of(v) > m) throw precondition_error("polynomial involves foreign variables");
      a[u.index_of(v)] = ex;
    }
    std::vector<int> key;
    MultiPoly prod = MultiPoly::constant(u, c);
    for (int j = 1; j <= m; ++j) {
      int mult = a[j] - a[j + 1];
      if (mult < 0) throw precondition_error("polynomial is not symmetric");
      for (int t = 0; t < mult; ++t) {
        key.push_back(j);
        prod *= e[j];
      }
    }
    std::sort(key.rbegin(), key.rend());
    out.add(key, c);
    rest -= prod;
  }
  return out;
}

// h_r in the e-basis from sum_{i=0}^{r} (-1)^i e_i h_{r-i} = 0.  Needs m >= r
// to be meaningful as an identity of abstract symmetric functions.
inline std::vector<SymFunc> complete_in_e(int D, int m) {
  std::vector<SymFunc> h{SymFunc::one(D, m)};
  for (int r = 1; r <= D; ++r) {
    SymFunc hr(D, m);
    for (int i = 1; i <= r; ++i) {
      SymFunc t = SymFunc::e(i, D, m) * h[r - i];
      hr = (i % 2 == 1) ? hr + t : hr - t;
    }
    h.push_back(hr);
  }
  return h;
}

// The involution e_r <-> h_r.  Faithful only when m >= D.
inline SymFunc omega(const SymFunc& f) {
  if (f.m < f.D) throw precondition_error("omega needs at least D variables");
  auto h = complete_in_e(f.D, f.m);
  SymFunc out(f.D, f.m);
  out.lossy = f.lossy;
  for (const auto& [k, c] : f.terms) {
    SymFunc t = SymFunc::one(f.D, f.m);
    for (int r : k) t = t * h[r];
    out = out + t.scaled(c);
  }
  out.lossy = f.lossy;
  return out;
}

// A filling of a Young diagram: box contents in row-reading order, each a
// sorted list (a set, or a multiset for the weak variant).
struct Tableau {
  Partition shape;
  std::vector<std::vector<std::vector<int>>> rows;

  int size() const {
    int s = 0;
    for (const auto& r : rows)
      for (const auto& b : r) s += static_cast<int>(b.size());
    return s;
  }

  // Bracketed grid, one row per line: [1][123][35]
  std::string str() const {
    std::string s;
    bool wide = false;
    for (const auto& r : rows)
      for (const auto& b : r)
        for (int v : b) wide = wide || v > 9;
    for (const auto& r : rows) {
      if (r.empty()) continue;
      for (const auto& b : r) {
        s += "[";
        for (std::size_t i = 0; i < b.size(); ++i) {
          if (wide && i) s += ",";
          s += std::to_string(b[i]);
        }
        s += "]";
      }
      s += "\n";
    }
    return s;
  }
};

enum class TableauKind { SetValued, WeakSetValued };

// Depth-first over boxes in row-reading order.  Set-valued: rows weakly
// increasing (max A <= min B), columns strict (max A < min B).  Weak:
// multisets, rows strict, columns weak.  Entries in 1..m, |T| <= D.
inline void enumerate_tableaux(const Partition& shape, int m, int D, TableauKind kind,
                               const std::function<void(const Tableau&)>& visit) {
  Partition lam = shape.trimmed();
  int boxes = lam.size();
  if (boxes > D) return;
  Tableau T{lam, {}};
  for (int r = 1; r <= lam.length(); ++r) T.rows.push_back(std::vector<std::vector<int>>(lam[r]));
  bool weak = kind == TableauKind::WeakSetValued;
  std::vector<std::pair<int, int>> order;
  for (int r = 1; r <= lam.length(); ++r)
    for (int c = 1; c <= lam[r]; ++c) order.push_back({r, c});

  std::function<void(std::size_t, int)> place = [&](std::size_t idx, int used) {
    if (idx == order.size()) {
      visit(T);
      return;
    }
    auto [r, c] = order[idx];
    int lo = 1;
    if (c > 1) lo = std::max(lo, T.rows[r - 1][c - 2].back() + (weak ? 1 : 0));
    if (r > 1) lo = std::max(lo, T.rows[r - 2][c - 1].back() + (weak ? 0 : 1));
    int budget = D - used - static_cast<int>(order.size() - idx - 1);
    auto& box = T.rows[r - 1][c - 1];
    // Sets (or multisets) with minimum >= lo, built in increasing order.
    std::function<void(int)> grow = [&](int next) {
      if (!box.empty()) place(idx + 1, used + static_cast<int>(box.size()));
      if (static_cast<int>(box.size()) == budget) return;
      for (int v = next; v <= m; ++v) {
        box.push_back(v);
        grow(weak ? v : v + 1);
        box.pop_back();
      }
    };
    grow(lo);
  };
  if (boxes == 0) {
    visit(T);
    return;
  }
  place(0, 0);
}

inline std::vector<Tableau> list_tableaux(const Partition& shape, int m, int D, TableauKind kind) {
  std::vector<Tableau> out;
  enumerate_tableaux(shape, m, D, kind, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

inline MultiPoly tableau_weight(const Tableau& t, VarUniverse u) {
  Monomial mono;
  for (const auto& r : t.rows)
    for (const auto& b : r)
      for (int v : b) mono = mono * Monomial::var(u.x(v));
  return MultiPoly::from_terms(u, {{mono, Rational(1)}});
}

// sum_T sign^{|T|-|lambda|} x^T over tableaux of the given kind.
inline MultiPoly tableau_sum(const Partition& lam, int m, int D, TableauKind kind, bool signed_sum, VarUniverse u) {
  std::vector<MultiPoly::Term> out;
  enumerate_tableaux(lam, m, D, kind, [&](const Tableau& t) {
    Monomial mono;
    for (const auto& r : t.rows)
      for (const auto& b : r)
        for (int v : b) mono = mono * Monomial::var(u.x(v));
    int sign = signed_sum && (t.size() - lam.size()) % 2 ? -1 : 1;
    out.push_back({mono, Rational(sign)});
  });
  return MultiPoly::from_terms(u, std::move(out));
}

inline MultiPoly grothendieck_G(const Partition& lam, int m, int D, VarUniverse u) {
  return tableau_sum(lam, m, D, TableauKind::SetValued, true, u);
}
inline MultiPoly grothendieck_K(const Partition& lam, int m, int D, VarUniverse u) {
  return tableau_sum(lam, m, D, TableauKind::SetValued, false, u);
}
inline MultiPoly weak_J(const Partition& lam, int m, int D, VarUniverse u) {
  return tableau_sum(lam, m, D, TableauKind::WeakSetValued, false, u);
}
inline MultiPoly box_G(int m, int D, VarUniverse u) { return grothendieck_G(Partition({1}), m, D, u); }

// J via omega of the unsigned Grothendieck function, in m = D variables.
inline MultiPoly weak_J_via_omega(const Partition& lam, int D, VarUniverse u) {
  SymFunc K = from_symmetric_poly(grothendieck_K(lam, D, D, u), D, D);
  return to_poly(omega(K), u);
}

// Expansion f = sum c_mu G_mu in m variables, up to degree D, by repeatedly
// removing the lex-leading monomial of the lowest-degree part.
inline std::map<Partition, Rational> expand_in_G(const MultiPoly& f, int m, int D) {
  VarUniverse u = f.universe();
  std::map<Partition, Rational> out;
  MultiPoly rest = truncate(f, D);
  while (!rest.is_zero()) {
    int low = rest.terms().back().first.degree();
    const MultiPoly::Term* lead = nullptr;
    for (const auto& t : rest.terms())
      if (t.first.degree() == low) {
        lead = &t;
        break;
      }
    std::vector<int> parts(m, 0);
    for (const auto& [v, e] : lead->first.entries()) parts[u.index_of(v) - 1] = e;
    Partition mu(parts);
    Rational c = lead->second;
    out[mu] = c;
    rest -= grothendieck_G(mu, m, D, u).scaled(c);
  }
  return out;
}

// Non-equivariant K(Gr(k,n)) in structure-sheaf coordinates.  c_r(V^dual)
// acts by the t = 0 structure-sheaf Pieri rule; the unit is O_empty.
class KGrassmannian {
 public:
  explicit KGrassmannian(const GrassSetting& s) : s_(s), u_{s.n} {
    Substitution t0;
    t0.value.resize(u_.size());
    for (int i = 1; i <= s.n; ++i) t0.value[u_.t(i)] = MultiPoly(u_);
    B_.resize(s.k + 1);
    for (int r = 1; r <= s.k; ++r)
      B_[r] = operator_matrix(s, [&](const Partition& lam) {
        return substitute(pieri(ClassKind::StructureSheaf, lam, r, s), t0);
      });
  }

  const GrassSetting& setting() const { return s_; }
  GrassVector unit() const { return basis_vector(empty_partition(s_), u_); }
  GrassVector c(int r, const GrassVector& v) const {
    if (r == 0) return v;
    if (r > s_.k) return {};
    return apply_matrix(B_[r], v);
  }
  GrassVector e_monomial(const std::vector<int>& key, GrassVector v) const {
    for (int r : key) {
      v = c(r, v);
      if (v.empty()) break;
    }
    return v;
  }

  // rho(f) . v; e_r with r > k act by zero.
  GrassVector rho(const SymFunc& f, const GrassVector& v) const {
    if (f.D < s_.dim()) throw precondition_error("truncation below the nilpotency bound");
    if (f.m < s_.k) throw precondition_error("too few variables for rho");
    GrassVector out;
    for (const auto& [key, c] : f.terms) {
      GrassVector t = e_monomial(key, v);
      for (const auto& [lam, a] : t) accumulate(out, lam, a.scaled(c));
    }
    return out;
  }
  GrassVector rho(const SymFunc& f) const { return rho(f, unit()); }

 private:
  GrassSetting s_;
  VarUniverse u_;
  std::vector<std::map<Partition, GrassVector>> B_;
};

// rho((1 - G_box)^n J_{lambda'}) . 1, computed in k variables.  lambda may lie
// outside the rectangle.
inline GrassVector theorem_E_class(const KGrassmannian& K, const Partition& lam, int D) {
  const GrassSetting& s = K.setting();
  VarUniverse u{s.n};
  int m = s.k;
  MultiPoly one_minus_G = MultiPoly::constant(u, 1) - box_G(m, D, u);
  MultiPoly f = mul_trunc(pow_trunc(one_minus_G, s.n, D), weak_J(lam.trimmed().conjugate(), m, D, u), D);
  return K.rho(from_symmetric_poly(f, m, D));
}

// Dualizing-sheaf Pieri coefficients by top-y extraction from the
// non-equivariant motivic Chern Pieri rule: Omega[lambda][mu] is the
// coefficient of y^{|mu| - |lambda|}.  Throws if a higher power appears.
inline std::map<Partition, GrassVector> omega_from_mc(const GrassSetting& s, int r) {
  VarUniverse u{s.n};
  Substitution t0;
  t0.value.resize(u.size());
  for (int i = 1; i <= s.n; ++i) t0.value[u.t(i)] = MultiPoly(u);
  return operator_matrix(s, [&](const Partition& lam) {
    GrassVector out;
    for (const auto& [mu, a] : substitute(pieri(ClassKind::MotivicChern, lam, r, s), t0)) {
      int top = mu.size() - lam.size();
      if (a.degree_in(VarUniverse::Y) > top) throw consistency_error("y-degree exceeds the dimension drop");
      accumulate(out, mu, a.coefficient(VarUniverse::Y, top));
    }
    return out;
  });
}

// Q[x]/(x^N) with coefficients in the y-polynomials; index i holds x^i.
struct TruncatedX {
  int N = 2;
  std::vector<MultiPoly> c;

  TruncatedX(int N_, VarUniverse u) : N(N_), c(N_, MultiPoly(u)) {}
  static TruncatedX from_poly(const MultiPoly& f, int N, int var) {
    VarUniverse u = f.universe();
    TruncatedX r(N, u);
    for (const auto& [mono, a] : f.terms()) {
      Monomial rest = mono;
      int e = rest.take(var);
      if (e < N) r.c[e] += MultiPoly::from_terms(u, {{rest, a}});
    }
    return r;
  }
  friend TruncatedX operator*(const TruncatedX& a, const TruncatedX& b) {
    TruncatedX r(a.N, a.c[0].universe());
    for (int i = 0; i < a.N; ++i)
      for (int j = 0; i + j < a.N; ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }
  friend TruncatedX operator+(TruncatedX a, const TruncatedX& b) {
    for (int i = 0; i < a.N; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend TruncatedX operator-(TruncatedX a, const TruncatedX& b) {
    for (int i = 0; i < a.N; ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend bool operator==(const TruncatedX& a, const TruncatedX& b) { return a.N == b.N && a.c == b.c; }
  std::string str() const {
    std::string s;
    for (int i = 0; i < N; ++i) {
      if (c[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c[i].str() + ")";
      if (i) s += i == 1 ? "*x" : "*x^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }
};

// For Gr(1,N): rho(f) = f(x, 0, 0, ...) mod x^N.
inline TruncatedX rho_projective(const MultiPoly& f_in_x1, int N) {
  VarUniverse u = f_in_x1.universe();
  return TruncatedX::from_poly(f_in_x1, N, u.x(1));
}

}  // namespace ribbon
