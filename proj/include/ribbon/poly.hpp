#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ribbon/errors.hpp"
#include "ribbon/rational.hpp"

namespace ribbon {

// Variable slots for ambient rank n: p, q, hbar, y, t_1..t_n, x_1..x_n.
struct VarUniverse {
  int n = 0;

  static constexpr int P = 0, Q = 1, HBAR = 2, Y = 3;
  int t(int i) const { return 3 + i; }
  int x(int i) const { return 3 + n + i; }
  int size() const { return 4 + 2 * n; }
  bool is_t(int v) const { return v >= 4 && v < 4 + n; }
  bool is_x(int v) const { return v >= 4 + n && v < 4 + 2 * n; }
  int index_of(int v) const { return is_t(v) ? v - 3 : v - 3 - n; }

  std::string name(int v) const {
    switch (v) {
      case P: return "p";
      case Q: return "q";
      case HBAR: return "hbar";
      case Y: return "y";
      default: break;
    }
    if (is_t(v)) return "t" + std::to_string(index_of(v));
    if (is_x(v)) return "x" + std::to_string(index_of(v));
    throw structural_error("variable index out of universe");
  }

  std::optional<int> lookup(std::string_view s) const {
    if (s == "p") return P;
    if (s == "q") return Q;
    if (s == "hbar") return HBAR;
    if (s == "y") return Y;
    if (s.size() >= 2 && (s[0] == 't' || s[0] == 'x')) {
      int i = 0;
      for (char c : s.substr(1)) {
        if (c < '0' || c > '9') return std::nullopt;
        i = i * 10 + (c - '0');
      }
      if (s[1] == '0' || i < 1 || i > n) return std::nullopt;
      return s[0] == 't' ? t(i) : x(i);
    }
    return std::nullopt;
  }
};

// Sparse exponent vector: (variable, exponent) pairs sorted by variable,
// exponents positive.  Total degree is cached.
class Monomial {
 public:
  using Entry = std::pair<std::uint16_t, std::uint16_t>;

  Monomial() = default;
  static Monomial var(int v, int e = 1) {
    Monomial m;
    if (e > 0) {
      m.e_.push_back({static_cast<std::uint16_t>(v), static_cast<std::uint16_t>(e)});
      m.deg_ = e;
    }
    return m;
  }

  int degree() const { return deg_; }
  bool is_one() const { return e_.empty(); }
  const auto& entries() const { return e_; }

  int exponent(int v) const {
    for (auto [var, e] : e_)
      if (var == v) return e;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.deg_ = a.deg_ + b.deg_;
    std::size_t i = 0, j = 0;
    while (i < a.e_.size() && j < b.e_.size()) {
      if (a.e_[i].first == b.e_[j].first) {
        r.e_.push_back({a.e_[i].first,
                        static_cast<std::uint16_t>(a.e_[i].second + b.e_[j].second)});
        ++i;
        ++j;
      } else if (a.e_[i].first < b.e_[j].first) {
        r.e_.push_back(a.e_[i++]);
      } else {
        r.e_.push_back(b.e_[j++]);
      }
    }
    for (; i < a.e_.size(); ++i) r.e_.push_back(a.e_[i]);
    for (; j < b.e_.size(); ++j) r.e_.push_back(b.e_[j]);
    return r;
  }

  // Remove variable v, returning its exponent.
  int take(int v) {
    for (auto it = e_.begin(); it != e_.end(); ++it) {
      if (it->first == v) {
        int e = it->second;
        e_.erase(it);
        deg_ -= e;
        return e;
      }
    }
    return 0;
  }

  // Graded lexicographic comparison on the variable index order.
  static int compare(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ > b.deg_ ? 1 : -1;
    std::size_t i = 0, j = 0;
    while (i < a.e_.size() && j < b.e_.size()) {
      if (a.e_[i].first == b.e_[j].first) {
        if (a.e_[i].second != b.e_[j].second)
          return a.e_[i].second > b.e_[j].second ? 1 : -1;
        ++i;
        ++j;
      } else {
        return a.e_[i].first < b.e_[j].first ? 1 : -1;
      }
    }
    return 0;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }
  // Descending graded-lex: "greater" monomials sort first.
  struct Desc {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return compare(a, b) > 0;
    }
  };

 private:
  boost::container::small_vector<Entry, 6> e_;
  int deg_ = 0;
};

class MultiPoly;

// Per-variable replacement used by specialize/substitute.  Unset slots keep
// the variable symbolic.
struct Substitution {
  std::vector<std::optional<MultiPoly>> value;
};

// Sparse polynomial over Q in a fixed VarUniverse.  Terms are kept sorted in
// descending graded-lex order with no zero coefficients, so == is structural.
// A default-constructed value is zero with no universe bound yet; it adopts
// the universe of whatever it is combined with.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(VarUniverse u) : n_(u.n) {}
  MultiPoly(VarUniverse u, Rational c) : n_(u.n) {
    if (!c.is_zero()) terms_.push_back({Monomial(), std::move(c)});
  }
  static MultiPoly var(VarUniverse u, int v, int e = 1) {
    if (v < 0 || v >= u.size()) throw structural_error("variable outside universe");
    MultiPoly r(u);
    r.terms_.push_back({Monomial::var(v, e), Rational(1)});
    return r;
  }
  static MultiPoly constant(VarUniverse u, Rational c) { return MultiPoly(u, std::move(c)); }
  static MultiPoly from_terms(VarUniverse u, std::vector<Term> terms) {
    MultiPoly r(u);
    r.terms_ = std::move(terms);
    r.normalize();
    return r;
  }

  bool has_universe() const { return n_ >= 0; }
  VarUniverse universe() const {
    if (n_ < 0) throw structural_error("polynomial has no universe");
    return VarUniverse{n_};
  }
  int rank() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return Rational();
  }
  int degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }
  int degree_in(int v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
  }
  bool involves(int v) const {
    for (const auto& [m, c] : terms_)
      if (m.exponent(v) > 0) return true;
    return false;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ >= 0 && b.n_ >= 0 && a.n_ != b.n_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second)
        return false;
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.n_ = join(a, b);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = Monomial::compare(a.terms_[i].first, b.terms_[j].first);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        Rational s = a.terms_[i].second + b.terms_[j].second;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].first, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.n_ = join(a, b);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.is_constant()) return b.scaled(a.terms_[0].second).with_rank(r.n_);
    if (b.is_constant()) return a.scaled(b.terms_[0].second).with_rank(r.n_);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.terms_.push_back({ma * mb, ca * cb});
    r.normalize();
    return r;
  }

  MultiPoly scaled(const Rational& c) const {
    MultiPoly r;
    r.n_ = n_;
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    if (!c.is_one())
      for (auto& t : r.terms_) t.second *= c;
    return r;
  }
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a) { return a.scaled(c); }

  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly pow(int e) const {
    if (e < 0) throw precondition_error("negative power");
    MultiPoly r = MultiPoly::constant(universe(), 1);
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  // Replace assigned variables by the given polynomials.
  MultiPoly substitute(const Substitution& s) const;

  // Rename variables via a total map on indices (e.g. x_i -> t_i).
  template <class F>
  MultiPoly rename(F&& f) const {
    MultiPoly r;
    r.n_ = n_;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial nm;
      for (auto [v, e] : m.entries()) nm = nm * Monomial::var(f(static_cast<int>(v)), e);
      r.terms_.push_back({std::move(nm), c});
    }
    r.normalize();
    return r;
  }

  // Coefficient of v^e, as a polynomial free of v.
  MultiPoly coefficient(int v, int e) const {
    MultiPoly r;
    r.n_ = n_;
    for (const auto& [m, c] : terms_) {
      if (m.exponent(v) != e) continue;
      Monomial nm = m;
      nm.take(v);
      r.terms_.push_back({std::move(nm), c});
    }
    r.normalize();
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    VarUniverse u{std::max(n_, 0)};
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool neg = c.sign() < 0;
      Rational a = neg ? -c : c;
      if (first) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (auto [v, e] : m.entries()) {
        if (!mono.empty()) mono += "*";
        mono += u.name(v);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) {
        s += a.str();
      } else if (a.is_one()) {
        s += mono;
      } else {
        s += a.str() + "*" + mono;
      }
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

  static MultiPoly parse(VarUniverse u, std::string_view text);

 private:
  static int join(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ >= 0 && b.n_ >= 0 && a.n_ != b.n_)
      throw structural_error("polynomials from different universes (n=" + std::to_string(a.n_) +
                             " vs n=" + std::to_string(b.n_) + ")");
    return a.n_ >= 0 ? a.n_ : b.n_;
  }
  MultiPoly with_rank(int n) && {
    n_ = n;
    return std::move(*this);
  }
  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return Monomial::compare(x.first, y.first) > 0; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      std::size_t j = i;
      Rational acc = terms_[i].second;
      while (++j < terms_.size() && terms_[j].first == terms_[i].first) acc += terms_[j].second;
      if (!acc.is_zero()) {
        if (w != i) terms_[w].first = std::move(terms_[i].first);
        terms_[w].second = std::move(acc);
        ++w;
      }
      i = j;
    }
    terms_.resize(w);
  }

  int n_ = -1;
  std::vector<Term> terms_;
};

inline MultiPoly MultiPoly::substitute(const Substitution& s) const {
  VarUniverse u = universe();
  std::map<std::pair<int, int>, MultiPoly> powcache;
  auto power = [&](int v, int e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = powcache.find(key);
    if (it != powcache.end()) return it->second;
    return powcache.emplace(key, s.value[v]->pow(e)).first->second;
  };
  std::vector<Term> plain;
  MultiPoly out(u);
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    MultiPoly factor;
    bool touched = false;
    for (auto [v, e] : m.entries()) {
      if (v < s.value.size() && s.value[v]) {
        factor = touched ? factor * power(v, e) : power(v, e);
        touched = true;
      } else {
        rest = rest * Monomial::var(v, e);
      }
    }
    if (!touched) {
      plain.push_back({std::move(rest), c});
      continue;
    }
    if (factor.is_zero()) continue;
    std::vector<Term> part;
    part.reserve(factor.size());
    for (const auto& [fm, fc] : factor.terms_) part.push_back({fm * rest, fc * c});
    for (auto& t : part) plain.push_back(std::move(t));
  }
  return from_terms(u, std::move(plain));
}

namespace detail {

class PolyParser {
 public:
  PolyParser(VarUniverse u, std::string_view s) : u_(u), s_(s) {}

  MultiPoly run() {
    MultiPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw precondition_error("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                             why + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c));
  }
  MultiPoly expr() {
    MultiPoly r(u_);
    bool neg = false;
    if (peek('-')) {
      ++pos_;
      neg = true;
    } else if (peek('+')) {
      ++pos_;
    }
    MultiPoly t = term();
    r = neg ? -t : t;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        r += term();
      } else if (peek('-')) {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }
  MultiPoly term() {
    MultiPoly r = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        r *= factor();
      } else if (starts_factor()) {
        r *= factor();
      } else {
        return r;
      }
    }
  }
  MultiPoly factor() {
    MultiPoly b = base();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("exponent expected");
      b = b.pow(std::stoi(std::string(s_.substr(st, pos_ - st))));
    }
    return b;
  }
  MultiPoly base() {
    skip();
    if (pos_ >= s_.size()) fail("operand expected");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly r = expr();
      if (!peek(')')) fail("')' expected");
      ++pos_;
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      return MultiPoly::constant(u_, Rational::parse(s_.substr(st, pos_ - st)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto name = s_.substr(st, pos_ - st);
      auto v = u_.lookup(name);
      if (!v) fail("unknown variable '" + std::string(name) + "'");
      return MultiPoly::var(u_, *v);
    }
    fail("unexpected character");
  }

  VarUniverse u_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly MultiPoly::parse(VarUniverse u, std::string_view text) {
  return detail::PolyParser(u, text).run();
}

// Rational values for a subset of p, q, hbar, y, t_i; everything else stays
// symbolic.
struct ParamSpec {
  std::optional<Rational> p, q, hbar, y;
  std::map<int, Rational> t;  // 1-based index

  Substitution substitution(VarUniverse u) const {
    Substitution s;
    s.value.resize(u.size());
    auto put = [&](int v, const std::optional<Rational>& r) {
      if (r) s.value[v] = MultiPoly::constant(u, *r);
    };
    put(VarUniverse::P, p);
    put(VarUniverse::Q, q);
    put(VarUniverse::HBAR, hbar);
    put(VarUniverse::Y, y);
    for (const auto& [i, r] : t) {
      if (i < 1 || i > u.n) throw structural_error("t index outside universe");
      s.value[u.t(i)] = MultiPoly::constant(u, r);
    }
    return s;
  }

  std::string str() const {
    std::string s = "{";
    auto add = [&](const std::string& k, const std::optional<Rational>& r) {
      if (!r) return;
      if (s.size() > 1) s += ",";
      s += k + "=" + r->str();
    };
    add("p", p);
    add("q", q);
    add("hbar", hbar);
    add("y", y);
    for (const auto& [i, r] : t) add("t" + std::to_string(i), r);
    return s + "}";
  }
};

inline MultiPoly specialize(const MultiPoly& a, const ParamSpec& s) {
  if (!a.has_universe()) return a;
  return a.substitute(s.substitution(a.universe()));
}

// [m] = sum_{i<m} p^i q^{m-1-i}.
inline MultiPoly quantum_number(VarUniverse u, int m) {
  if (m < 0) throw domain_error("quantum number of negative integer");
  MultiPoly r(u);
  for (int i = 0; i < m; ++i)
    r += MultiPoly::var(u, VarUniverse::P, i) * MultiPoly::var(u, VarUniverse::Q, m - 1 - i);
  return r;
}

inline MultiPoly quantum_factorial(VarUniverse u, int m) {
  if (m < 0) throw domain_error("quantum factorial of negative integer");
  MultiPoly r = MultiPoly::constant(u, 1);
  for (int i = 2; i <= m; ++i) r *= quantum_number(u, i);
  return r;
}

}  // namespace ribbon
