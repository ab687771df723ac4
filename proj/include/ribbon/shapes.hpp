#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ribbon/errors.hpp"

namespace ribbon {

struct GrassSetting {
  int n = 0;
  int k = 0;

  GrassSetting() = default;
  GrassSetting(int n_, int k_) : n(n_), k(k_) {
    if (n < 1 || n > 16) throw domain_error("n must lie in 1..16");
    if (k < 0 || k > n) throw domain_error("k must lie in 0..n");
  }
  int width() const { return n - k; }
  int dim() const { return k * (n - k); }
  friend bool operator==(const GrassSetting&, const GrassSetting&) = default;
};

// Exactly k weakly decreasing parts, zeros kept.  Rows are 1-based.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (p_[i] < 0) throw domain_error("negative part");
      if (i > 0 && p_[i] > p_[i - 1]) throw domain_error("parts must weakly decrease");
    }
  }

  int length() const { return static_cast<int>(p_.size()); }
  int operator[](int row) const { return row >= 1 && row <= length() ? p_[row - 1] : 0; }
  int part_or(int row, int fallback) const {
    return row >= 1 && row <= length() ? p_[row - 1] : fallback;
  }
  const std::vector<int>& parts() const { return p_; }
  int size() const { return std::accumulate(p_.begin(), p_.end(), 0); }
  int nonzero_rows() const {
    return static_cast<int>(std::count_if(p_.begin(), p_.end(), [](int v) { return v > 0; }));
  }

  bool fits(const GrassSetting& s) const {
    return length() == s.k && (p_.empty() || p_.front() <= s.width());
  }
  void require_fits(const GrassSetting& s) const {
    if (length() != s.k) throw domain_error("partition " + str() + " must have exactly k parts");
    if (!fits(s)) throw domain_error("partition " + str() + " does not fit the rectangle");
  }
  bool contains(const Partition& o) const {
    if (o.length() != length()) return false;
    for (int i = 0; i < length(); ++i)
      if (o.p_[i] > p_[i]) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> c(p_.empty() ? 0 : p_.front(), 0);
    for (int v : p_)
      for (int j = 0; j < v; ++j) ++c[j];
    return Partition(std::move(c));
  }
  // Keep the nonzero parts only.
  Partition trimmed() const {
    std::vector<int> c;
    for (int v : p_)
      if (v > 0) c.push_back(v);
    return Partition(std::move(c));
  }
  Partition padded(int k) const {
    if (nonzero_rows() > k) throw domain_error("partition " + str() + " has more than k rows");
    std::vector<int> c = trimmed().p_;
    c.resize(k, 0);
    return Partition(std::move(c));
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p_[i]);
    }
    return s + "]";
  }
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
  // Graded, then lexicographic.
  friend bool operator<(const Partition& a, const Partition& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.p_ < b.p_;
  }

 private:
  std::vector<int> p_;
};

inline Partition empty_partition(const GrassSetting& s) { return Partition(std::vector<int>(s.k, 0)); }
inline Partition full_partition(const GrassSetting& s) {
  return Partition(std::vector<int>(s.k, s.width()));
}

// All partitions in the k x (n-k) rectangle, graded-lex ascending.
inline std::vector<Partition> partitions_in(const GrassSetting& s) {
  std::vector<Partition> out;
  std::vector<int> cur(s.k, 0);
  auto rec = [&](auto&& self, int row, int bound) -> void {
    if (row == s.k) {
      out.push_back(Partition(cur));
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      cur[row] = v;
      self(self, row + 1, v);
    }
  };
  rec(rec, 0, s.width());
  std::sort(out.begin(), out.end());
  return out;
}

// lambda_i + lambdabar_{k+1-i} = n-k.
inline Partition dual_partition(const Partition& lam, const GrassSetting& s) {
  lam.require_fits(s);
  std::vector<int> c(s.k);
  for (int i = 1; i <= s.k; ++i) c[s.k - i] = s.width() - lam[i];
  return Partition(std::move(c));
}

// One-line permutation of {1..n}, n <= 16, packed one nibble per position
// with position 1 in the top nibble, so integer order is lexicographic order.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n) {
    Permutation w;
    w.n_ = static_cast<std::uint8_t>(n);
    for (int i = 1; i <= n; ++i) w.set(i, i);
    return w;
  }
  static Permutation from_oneline(const std::vector<int>& v) {
    int n = static_cast<int>(v.size());
    if (n < 1 || n > 16) throw domain_error("permutation size must lie in 1..16");
    std::vector<bool> seen(n + 1, false);
    Permutation w;
    w.n_ = static_cast<std::uint8_t>(n);
    for (int i = 1; i <= n; ++i) {
      int x = v[i - 1];
      if (x < 1 || x > n || seen[x]) throw domain_error("not a permutation");
      seen[x] = true;
      w.set(i, x);
    }
    return w;
  }
  static Permutation parse(const std::string& s) {
    std::vector<int> v;
    if (s.find(',') != std::string::npos) {
      std::size_t st = 0;
      while (st <= s.size()) {
        std::size_t e = s.find(',', st);
        if (e == std::string::npos) e = s.size();
        v.push_back(std::stoi(s.substr(st, e - st)));
        st = e + 1;
      }
    } else {
      for (char c : s) {
        if (c < '1' || c > '9') throw domain_error("bad permutation digit");
        v.push_back(c - '0');
      }
    }
    return from_oneline(v);
  }
  // Simple transposition s_i in S_n.
  static Permutation simple(int n, int i) {
    if (i < 1 || i >= n) throw domain_error("generator index out of range");
    return identity(n).times_s(i);
  }
  static Permutation longest(int n) {
    Permutation w;
    w.n_ = static_cast<std::uint8_t>(n);
    for (int i = 1; i <= n; ++i) w.set(i, n + 1 - i);
    return w;
  }

  int n() const { return n_; }
  int operator()(int i) const { return static_cast<int>((code_ >> shift(i)) & 0xF) + 1; }
  std::uint64_t code() const { return code_; }

  std::vector<int> oneline() const {
    std::vector<int> v(n_);
    for (int i = 1; i <= n_; ++i) v[i - 1] = (*this)(i);
    return v;
  }
  int position_of(int value) const {
    for (int i = 1; i <= n_; ++i)
      if ((*this)(i) == value) return i;
    return 0;
  }

  int length() const {
    int inv = 0;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
  }

  // w s_i: swap positions i, i+1.
  Permutation times_s(int i) const {
    Permutation w = *this;
    int a = (*this)(i), b = (*this)(i + 1);
    w.set(i, b);
    w.set(i + 1, a);
    return w;
  }
  // s_i w: swap values i, i+1.
  Permutation s_times(int i) const {
    Permutation w = *this;
    int a = position_of(i), b = position_of(i + 1);
    w.set(a, i + 1);
    w.set(b, i);
    return w;
  }
  bool right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  bool left_descent(int i) const { return position_of(i) > position_of(i + 1); }

  Permutation inverse() const {
    Permutation w;
    w.n_ = n_;
    for (int i = 1; i <= n_; ++i) w.set((*this)(i), i);
    return w;
  }
  // (u v)(i) = u(v(i)).
  friend Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.n_ != v.n_) throw structural_error("permutations of different sizes");
    Permutation w;
    w.n_ = u.n_;
    for (int i = 1; i <= u.n_; ++i) w.set(i, u(v(i)));
    return w;
  }

  // Lexicographically smallest reduced word w = s_{i1} ... s_{il}.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    for (;;) {
      int i = 1;
      while (i < n_ && !w.left_descent(i)) ++i;
      if (i >= n_) break;
      word.push_back(i);
      w = w.s_times(i);
    }
    return word;
  }
  static Permutation from_word(int n, const std::vector<int>& word) {
    Permutation w = identity(n);
    for (int i : word) w = w.times_s(i);
    return w;
  }

  std::string str() const {
    std::string s;
    for (int i = 1; i <= n_; ++i) {
      if (n_ > 9 && i > 1) s += ",";
      s += std::to_string((*this)(i));
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.str(); }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.code_ == b.code_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.code_ < b.code_;
  }

 private:
  static int shift(int i) { return 4 * (16 - i); }
  void set(int i, int value) {
    code_ &= ~(std::uint64_t{0xF} << shift(i));
    code_ |= static_cast<std::uint64_t>(value - 1) << shift(i);
  }

  std::uint64_t code_ = 0;
  std::uint8_t n_ = 0;
};

// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_oneline(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// w_lambda(k+1-i) = lambda_i + k + 1 - i; remaining values increasing.
inline Permutation grassmannian_perm(const Partition& lam, const GrassSetting& s) {
  lam.require_fits(s);
  std::vector<int> w(s.n, 0);
  std::vector<bool> used(s.n + 1, false);
  for (int i = 1; i <= s.k; ++i) {
    int v = lam[i] + s.k + 1 - i;
    w[s.k - i] = v;
    used[v] = true;
  }
  int next = 1;
  for (int j = s.k; j < s.n; ++j) {
    while (used[next]) ++next;
    w[j] = next++;
  }
  return Permutation::from_oneline(w);
}

// Column word s_1^{[lambda_k]} s_2^{[lambda_{k-1}]} ... s_k^{[lambda_1]},
// with s_i^{[j]} = s_{i+j-1} ... s_{i+1} s_i.
inline std::vector<int> column_word(const Partition& lam, const GrassSetting& s) {
  lam.require_fits(s);
  std::vector<int> word;
  for (int i = 1; i <= s.k; ++i) {
    int j = lam[s.k + 1 - i];
    for (int a = i + j - 1; a >= i; --a) word.push_back(a);
  }
  return word;
}

struct ParabolicDecomposition {
  Partition lambda;
  Permutation v;  // in S_k x S_{n-k}
};

// w = w_lambda v with l(w) = |lambda| + l(v).
inline ParabolicDecomposition parabolic_decompose(const Permutation& w, const GrassSetting& s) {
  if (w.n() != s.n) throw structural_error("permutation size differs from n");
  std::vector<int> top;
  for (int i = 1; i <= s.k; ++i) top.push_back(w(i));
  std::sort(top.begin(), top.end());
  std::vector<int> parts(s.k);
  for (int i = 1; i <= s.k; ++i) parts[i - 1] = top[s.k - i] - (s.k + 1 - i);
  Partition lam(parts);
  Permutation wl = grassmannian_perm(lam, s);
  return {lam, wl.inverse() * w};
}

inline Partition grassmannian_part(const Permutation& w, const GrassSetting& s) {
  return parabolic_decompose(w, s).lambda;
}

// Elements of S_k x S_{n-k}.
inline std::vector<Permutation> parabolic_subgroup(const GrassSetting& s) {
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(s.n)) {
    bool ok = true;
    for (int i = 1; i <= s.k && ok; ++i) ok = w(i) <= s.k;
    if (ok) out.push_back(w);
  }
  return out;
}

struct Ribbon {
  Partition inner, outer;
  int head_row = 0, tail_row = 0;
  int ht = 0, wd = 0;
  int head_value = 0;  // h = outer_{head} + k + 1 - head
  int tail_value = 0;  // t = inner_{tail} + k + 1 - tail
  int size() const { return ht + wd - 1; }
};

inline Ribbon make_ribbon(const Partition& inner, const Partition& outer, int a, int b, int k) {
  Ribbon r{inner, outer, a, b, b - a + 1, outer[a] - inner[b],
           outer[a] + k + 1 - a, inner[b] + k + 1 - b};
  return r;
}

// Checks mu/lambda box by box: nonempty, edge-connected, no 2x2 square.
inline std::optional<Ribbon> ribbon_between(const Partition& lam, const Partition& mu, int k) {
  if (!mu.contains(lam) || mu == lam) return std::nullopt;
  std::vector<std::pair<int, int>> boxes;
  for (int r = 1; r <= k; ++r)
    for (int c = lam[r] + 1; c <= mu[r]; ++c) boxes.push_back({r, c});
  auto in = [&](int r, int c) { return r >= 1 && r <= k && c > lam[r] && c <= mu[r]; };
  for (auto [r, c] : boxes)
    if (in(r, c) && in(r + 1, c) && in(r, c + 1) && in(r + 1, c + 1)) return std::nullopt;
  std::vector<bool> seen(boxes.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto [r, c] = boxes[stack.back()];
    stack.pop_back();
    for (std::size_t j = 0; j < boxes.size(); ++j) {
      if (seen[j]) continue;
      auto [r2, c2] = boxes[j];
      if (std::abs(r - r2) + std::abs(c - c2) == 1) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  if (reached != boxes.size()) return std::nullopt;
  int a = boxes.front().first, b = boxes.back().first;
  return make_ribbon(lam, mu, a, b, k);
}

// All mu in the rectangle with mu/lambda a ribbon.  Rows a..b of the ribbon
// satisfy mu_{r+1} = lambda_r + 1; only mu_a is free.
inline std::vector<Ribbon> addable_ribbons(const Partition& lam, const GrassSetting& s) {
  std::vector<Ribbon> out;
  for (int a = 1; a <= s.k; ++a) {
    int top = a == 1 ? s.width() : lam[a - 1];
    for (int b = a; b <= s.k; ++b) {
      if (b > a && lam[b - 1] + 1 <= lam[b]) break;
      for (int ma = lam[a] + 1; ma <= top; ++ma) {
        std::vector<int> m = lam.parts();
        m[a - 1] = ma;
        for (int r = a + 1; r <= b; ++r) m[r - 1] = lam[r - 1] + 1;
        out.push_back(make_ribbon(lam, Partition(m), a, b, s.k));
      }
    }
  }
  return out;
}

// All lambda with mu/lambda a ribbon: lambda_r = mu_{r+1} - 1 on rows a..b-1,
// lambda_b free in [mu_{b+1}, mu_b - 1].
inline std::vector<Ribbon> removable_ribbons(const Partition& mu, const GrassSetting& s) {
  std::vector<Ribbon> out;
  for (int a = 1; a <= s.k; ++a) {
    for (int b = a; b <= s.k; ++b) {
      if (b > a && mu[b] < 1) break;  // lambda_{b-1} = mu_b - 1 >= 0
      if (b > a && mu[b] - 1 >= mu[b - 1]) break;
      int lo = b == s.k ? 0 : mu[b + 1];
      for (int lb = lo; lb <= mu[b] - 1; ++lb) {
        std::vector<int> l = mu.parts();
        for (int r = a; r < b; ++r) l[r - 1] = mu[r + 1] - 1;
        l[b - 1] = lb;
        Partition lam(l);
        if (b > a && lam[a] >= mu[a]) continue;
        out.push_back(make_ribbon(lam, mu, a, b, s.k));
      }
    }
  }
  return out;
}

inline std::vector<Ribbon> ribbons_with_head_in_row(const Partition& lam, int i, const GrassSetting& s) {
  std::vector<Ribbon> out;
  for (auto& r : addable_ribbons(lam, s))
    if (r.head_row == i) out.push_back(std::move(r));
  return out;
}
inline std::vector<Ribbon> ribbons_with_tail_in_row(const Partition& lam, int i, const GrassSetting& s) {
  std::vector<Ribbon> out;
  for (auto& r : addable_ribbons(lam, s))
    if (r.tail_row == i) out.push_back(std::move(r));
  return out;
}
inline std::vector<Ribbon> removable_with_head_in_row(const Partition& mu, int i, const GrassSetting& s) {
  std::vector<Ribbon> out;
  for (auto& r : removable_ribbons(mu, s))
    if (r.head_row == i) out.push_back(std::move(r));
  return out;
}
inline std::vector<Ribbon> removable_with_tail_in_row(const Partition& mu, int i, const GrassSetting& s) {
  std::vector<Ribbon> out;
  for (auto& r : removable_ribbons(mu, s))
    if (r.tail_row == i) out.push_back(std::move(r));
  return out;
}

// At most one box per row of mu/lambda.
inline bool vertical_strip_check(const Partition& lam, const Partition& mu) {
  if (!mu.contains(lam)) return false;
  for (int r = 1; r <= lam.length(); ++r)
    if (mu[r] - lam[r] > 1) return false;
  return true;
}

// Number of edge-connected components of a vertical strip mu/lambda; each
// component is a width-one ribbon.  Returns nullopt if not a vertical strip.
inline std::optional<int> connected_vertical_strips(const Partition& lam, const Partition& mu) {
  if (!vertical_strip_check(lam, mu)) return std::nullopt;
  int comps = 0;
  int prev_col = -1;
  for (int r = 1; r <= lam.length(); ++r) {
    if (mu[r] == lam[r]) {
      prev_col = -1;
      continue;
    }
    int col = mu[r];
    if (col != prev_col) ++comps;
    prev_col = col;
  }
  return comps;
}

// Rows / columns of mu/lambda containing at least one box.
inline int skew_nonempty_rows(const Partition& lam, const Partition& mu) {
  int c = 0;
  for (int r = 1; r <= mu.length(); ++r)
    if (mu[r] > lam[r]) ++c;
  return c;
}

}  // namespace ribbon
