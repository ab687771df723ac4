#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/ribbonops.hpp"
#include "ribbon/shapes.hpp"

namespace ribbon {

// A word in the refined operators, listed in application order: the first
// pair acts on the partition first.
using UpsilonWord = std::vector<std::pair<int, int>>;

inline GrassVector apply_word(const OpContext& ctx, const UpsilonWord& w, GrassVector v) {
  for (auto [a, b] : w) {
    v = refined_op(ctx, a, b, v);
    if (v.empty()) break;
  }
  return v;
}

inline std::string word_str(const UpsilonWord& w) {
  std::string s;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    s += "v(" + std::to_string(it->first) + "," + std::to_string(it->second) + ")";
  return s;
}

enum class WordOrder { HeadDecreasing, TailDecreasing };

// All nonzero words of length r on lambda with head values strictly
// decreasing (resp. tail values strictly decreasing) in application order.
// The other coordinate is unrestricted apart from a <= b.
inline std::vector<std::pair<UpsilonWord, GrassVector>> nonzero_words(const OpContext& ctx, const Partition& lam,
                                                                       int r, WordOrder order) {
  int n = ctx.s.n;
  std::vector<std::pair<UpsilonWord, GrassVector>> out;
  UpsilonWord cur;
  auto rec = [&](auto&& self, const GrassVector& v, int bound) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back({cur, v});
      return;
    }
    for (int key = bound - 1; key >= 1; --key)
      for (int other = 1; other <= n; ++other) {
        int a = order == WordOrder::HeadDecreasing ? other : key;
        int b = order == WordOrder::HeadDecreasing ? key : other;
        if (a > b) continue;
        GrassVector w = refined_op(ctx, a, b, v);
        if (w.empty()) continue;
        cur.push_back({a, b});
        self(self, w, key);
        cur.pop_back();
      }
  };
  rec(rec, basis_vector(lam, ctx.u), n + 1);
  return out;
}

// Claim 1 (head form) or Claim 1' (tail form), for one lambda.  Returns a
// description of the first counterexample.
inline std::optional<std::string> check_swap_claim(const OpContext& ctx, const Partition& lam, bool tail_form) {
  int n = ctx.s.n;
  GrassVector base = basis_vector(lam, ctx.u);
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      GrassVector first = refined_op(ctx, a, b, base);
      if (first.empty()) continue;
      for (int a2 = 1; a2 <= n; ++a2)
        for (int b2 = a2; b2 <= n; ++b2) {
          // Claim 1: b2 < b; conclusions about a.  Claim 1': a2 < a; about b.
          if (tail_form ? !(a2 < a) : !(b2 < b)) continue;
          GrassVector both = refined_op(ctx, a2, b2, first);
          if (both.empty()) continue;
          std::string where = lam.str() + " " + word_str({{a, b}, {a2, b2}});
          if (tail_form ? b == b2 : a == a2) return "equal coordinates in nonzero product " + where;
          if (tail_form ? b < b2 : a < a2) {
            GrassVector swapped = apply_word(ctx, {{a2, b2}, {a, b}}, base);
            if (swapped != both) return "swap changes the value " + where;
          }
        }
    }
  return std::nullopt;
}

// Claim 2 (head-sorted words have distinct tails) or Claim 2'.
inline std::optional<std::string> check_distinct_claim(const OpContext& ctx, const Partition& lam, int r,
                                                       bool tail_form) {
  auto words = nonzero_words(ctx, lam, r, tail_form ? WordOrder::TailDecreasing : WordOrder::HeadDecreasing);
  for (const auto& [w, v] : words) {
    std::set<int> seen;
    for (auto [a, b] : w)
      if (!seen.insert(tail_form ? b : a).second) return "repeated value in " + lam.str() + " " + word_str(w);
  }
  return std::nullopt;
}

// The bijection phi: reorder a head-sorted word so tails decrease in
// application order.  Checks value preservation and that the image is the
// full set of nonzero tail-sorted words.
inline std::optional<std::string> check_phi(const OpContext& ctx, const Partition& lam, int r) {
  auto heads = nonzero_words(ctx, lam, r, WordOrder::HeadDecreasing);
  auto tails = nonzero_words(ctx, lam, r, WordOrder::TailDecreasing);
  std::map<UpsilonWord, GrassVector> target(tails.begin(), tails.end());
  std::set<UpsilonWord> hit;
  for (const auto& [w, v] : heads) {
    UpsilonWord img = w;
    std::sort(img.begin(), img.end(), [](auto x, auto y) { return x.first > y.first; });
    auto it = target.find(img);
    if (it == target.end()) return "phi image is not a nonzero tail-sorted word: " + lam.str() + " " + word_str(w);
    if (it->second != v) return "phi changes the value: " + lam.str() + " " + word_str(w);
    if (!hit.insert(img).second) return "phi is not injective at " + lam.str() + " " + word_str(img);
  }
  if (hit.size() != target.size()) return "phi is not surjective at " + lam.str();
  return std::nullopt;
}

// Regrouping of one operator application into refined pieces: the
// head-anchored operator in row i is the sum of v_ab over head values b in
// the row's interval; every ribbon with tail in row i has tail value
// lambda_i + k + 1 - i, so the tail-anchored one is a single tail group.
inline GrassVector regroup_row(const OpContext& ctx, const Partition& lam, int i, bool tail_anchored) {
  auto [lo, hi] = head_value_range(lam, i, ctx.s);
  if (tail_anchored) hi = lo;
  GrassVector base = basis_vector(lam, ctx.u), out;
  for (int key = lo; key <= hi; ++key)
    for (int other = 1; other <= ctx.s.n; ++other) {
      int a = tail_anchored ? key : other, b = tail_anchored ? other : key;
      if (a > b) continue;
      out = out + refined_op(ctx, a, b, base);
    }
  return out;
}

}  // namespace ribbon
