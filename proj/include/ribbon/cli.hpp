#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ribbon/errors.hpp"
#include "ribbon/hecke.hpp"
#include "ribbon/ribbonops.hpp"
#include "ribbon/shapes.hpp"
#include "ribbon/symfunc.hpp"
#include "ribbon/verify.hpp"

namespace ribbon::cli {

using nlohmann::json;

// Exit codes: 0 ok, 2 bad input, 3 failed identity or internal residue.
enum Exit { ok = 0, usage = 2, failure = 3 };

// "2,0" -> [2,0], right-padded with zeros to k parts.
inline Partition parse_lambda(const std::string& text, int k) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw domain_error("partition entries must be nonnegative integers: '" + text + "'");
    parts.push_back(std::stoi(item));
  }
  if (static_cast<int>(parts.size()) > k) throw domain_error("partition has more than k parts");
  parts.resize(k, 0);
  return Partition(parts);
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> v;
  if (text.empty()) return v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw domain_error("expected a comma list of nonnegative integers: '" + text + "'");
    v.push_back(std::stoi(item));
  }
  return v;
}

// Polynomial as [{"coeff":"a/b","exps":{"t3":1}}], in canonical term order.
inline json poly_json(const MultiPoly& f) {
  json out = json::array();
  if (!f.has_universe()) return out;
  VarUniverse u = f.universe();
  for (const auto& [m, c] : f.terms()) {
    json exps = json::object();
    for (auto [v, e] : m.entries()) exps[u.name(v)] = e;
    out.push_back({{"coeff", c.str()}, {"exps", exps}});
  }
  return out;
}

inline std::string coeff_text(const MultiPoly& c) {
  return c.terms().size() > 1 ? "(" + c.str() + ")" : c.str();
}

inline std::string render_pieri_text(const GrassVector& v, const std::string& tag) {
  std::string s;
  for (const auto& [mu, c] : v) s += coeff_text(c) + " * " + tag + mu.str() + "\n";
  return s.empty() ? "0\n" : s;
}

inline json render_pieri_json(const GrassVector& v, ClassKind kind, const GrassSetting& s, const Partition& lam,
                              int r) {
  json terms = json::array();
  for (const auto& [mu, c] : v) terms.push_back({{"mu", mu.parts()}, {"coeff", c.str()}});
  return {{"class", info(kind).name}, {"n", s.n}, {"k", s.k}, {"lambda", lam.parts()}, {"r", r}, {"terms", terms}};
}

inline std::vector<int> oneline(const Permutation& w) {
  std::vector<int> v;
  for (int i = 1; i <= w.n(); ++i) v.push_back(w(i));
  return v;
}

// Hecke element as [{"perm":"213","poly":[...]}], sorted by one-line word.
inline json hecke_json(const HeckeElement& h) {
  std::vector<std::pair<std::vector<int>, const MultiPoly*>> rows;
  for (const auto& [w, c] : h.terms) rows.push_back({oneline(w), &c});
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  json out = json::array();
  for (const auto& [w, c] : rows)
    out.push_back({{"perm", Permutation::from_oneline(w).str()}, {"poly", poly_json(*c)}});
  return out;
}

inline std::string render_hecke_text(const HeckeElement& h) {
  std::vector<std::pair<std::vector<int>, const MultiPoly*>> rows;
  for (const auto& [w, c] : h.terms) rows.push_back({oneline(w), &c});
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string sym = h.basis == Basis::T ? "T" : "Tbar";
  std::string s;
  for (const auto& [w, c] : rows) s += coeff_text(*c) + " * " + sym + "[" + Permutation::from_oneline(w).str() + "]\n";
  return s.empty() ? "0\n" : s;
}

inline json verify_json(const std::string& suite, const VerifyOptions& opt, const std::vector<CheckResult>& rs,
                        bool pass) {
  json checks = json::array();
  for (const auto& r : rs)
    checks.push_back({{"name", r.name},
                      {"setting", r.setting},
                      {"cases", r.cases},
                      {"failed", r.failed},
                      {"report_only", r.report_only},
                      {"pass", r.ok()},
                      {"counterexamples", r.counterexamples}});
  return {{"suite", suite}, {"n_max", opt.n_max}, {"seed", opt.seed}, {"pass", pass}, {"checks", checks}};
}

inline std::string verify_text(const std::vector<CheckResult>& rs) {
  std::string s;
  for (const auto& r : rs) {
    std::string tag = r.report_only ? (r.failed ? "[NOTE]" : "[INFO]") : (r.ok() ? "[PASS]" : "[FAIL]");
    s += tag + " " + r.name + " " + r.setting + " cases=" + std::to_string(r.cases) +
         " failed=" + std::to_string(r.failed) + "\n";
    for (const auto& c : r.counterexamples) s += "    counterexample: " + c + "\n";
  }
  return s;
}

inline int workers_from_env() {
  const char* w = std::getenv("PIERI_WORKERS");
  if (!w) return 1;
  int v = std::atoi(w);
  return v >= 1 ? std::min(v, 64) : 1;
}

// The worked examples, as the same text the pieri subcommand prints.
inline std::string example_text(const std::string& name) {
  if (name == "intro") {
    GrassSetting s(5, 2);
    return "c_2(V^dual) . MC[2,0] on Gr(2,5)\n" +
           render_pieri_text(pieri(ClassKind::MotivicChern, Partition({2, 0}), 2, s), "MC");
  }
  if (name == "segre") {
    GrassSetting s(5, 3);
    return "c_2(V^dual) . SMC[1,1,0] on Gr(3,5)\n" +
           render_pieri_text(pieri(ClassKind::SegreMotivic, Partition({1, 1, 0}), 2, s), "SMC");
  }
  if (name == "projective-line") {
    Comparator cmp(false);
    CheckResult r = check_projective_line(cmp);
    std::string s =
        "K(Gr(1,2)) = Q[x]/(x^2), chi(a + b x) = a + b\n"
        "[O_empty] = 1, [O_box] = x\n"
        "MC_empty = (1+y) - (2y+1)x, MC_box = x\n"
        "(1+y) SMC_empty = (1+y) + y x, (1+y) SMC_box = x\n"
        "lambda_y (1 - [O_box]) SMC = MC\n"
        "rho((1-G_box)^2 J_empty) = 1 - 2x, rho((1-G_box)^2 J_box) = x\n";
    return s + verify_text({r});
  }
  throw domain_error("unknown example '" + name + "' (intro, segre, projective-line)");
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ribbon Schubert operator Pieri calculus on Grassmannians", "ribbon-pieri"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  int n = 0, k = 0, r = 0;
  std::string klass, lambda;
  auto* pc = app.add_subcommand("pieri", "Expand c_r(V^dual) times a class");
  pc->add_option("--n", n, "Ambient dimension")->required();
  pc->add_option("--k", k, "Subspace dimension")->required();
  pc->add_option("--class", klass, "S, I, O, CSM, SM, MC, SMC or omega")->required();
  pc->add_option("--lambda", lambda, "Comma list, zero-padded to k parts")->required();
  pc->add_option("--r", r, "Chern degree 0..k")->required();
  bool opposite = false;
  pc->add_flag("--opposite", opposite, "Opposite cells X(lambda) instead of Y(lambda)");
  add_format(pc);

  int hn = 0, sigma_k = -1;
  std::string word, xpow, basis = "Tbar", pp = "p", qq = "q", hh = "hbar";
  auto* hc = app.add_subcommand("hecke", "Normal-order Tbar_word x^alpha [Sigma_k]");
  hc->add_option("--n", hn, "Rank")->required();
  hc->add_option("--word", word, "Generators, leftmost first");
  hc->add_option("--x", xpow, "Exponents of x_1..x_n placed right of the word");
  hc->add_option("--basis", basis, "T or Tbar")->check(CLI::IsMember({"T", "Tbar"}));
  hc->add_option("--p", pp, "Value of p");
  hc->add_option("--q", qq, "Value of q");
  hc->add_option("--hbar", hh, "Value of hbar");
  hc->add_option("--sigma", sigma_k, "Multiply by the symmetrizer on the right, for this k");
  add_format(hc);

  std::string suite = "all";
  VerifyOptions vopt;
  auto* vc = app.add_subcommand("verify", "Run identity suites by exhaustive search");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  vc->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suites));
  vc->add_option("--n-max", vopt.n_max, "Largest n")->check(CLI::Range(2, 7));
  vc->add_option("--seed", vopt.seed, "Seed for random parameters");
  vc->add_option("--samples", vopt.samples, "Random parameter draws per setting")->check(CLI::Range(1, 20));
  vc->add_flag("--inject-fault", vopt.inject_fault)->group("");
  add_format(vc);

  std::string shape;
  int max_entry = 3, max_size = 4;
  bool weak = false, poly = false;
  auto* tc = app.add_subcommand("tableaux", "List set-valued or weak set-valued tableaux");
  tc->add_option("--shape", shape, "Comma list")->required();
  tc->add_option("--max-entry", max_entry, "Largest entry")->check(CLI::Range(1, 9));
  tc->add_option("--max-size", max_size, "Largest total entry count")->check(CLI::Range(0, 12));
  tc->add_flag("--weak", weak, "Weak set-valued (multisets, rows strict, columns weak)");
  tc->add_flag("--poly", poly, "Print the generating polynomial instead");
  add_format(tc);

  std::string ex_name;
  auto* ec = app.add_subcommand("example", "Print a worked example");
  ec->add_option("--name", ex_name, "intro, segre or projective-line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  try {
    if (*pc) {
      GrassSetting s(n, k);
      auto kind = parse_class_kind(klass);
      if (!kind) throw domain_error("unknown class '" + klass + "'");
      if (r < 0 || r > k) throw domain_error("r must lie in 0..k");
      Partition lam = parse_lambda(lambda, k);
      lam.require_fits(s);
      if (opposite && info(*kind).segre) throw domain_error("--opposite takes a head-valued class");
      GrassVector v = opposite ? pieri_opposite_direct(*kind, lam, r, s) : pieri(*kind, lam, r, s);
      std::string tag = std::string(opposite ? "X" : "") + info(*kind).name;
      if (format == "json") {
        json j = render_pieri_json(v, *kind, s, lam, r);
        if (opposite) j["cells"] = "opposite";
        out << j.dump() << "\n";
      } else {
        out << render_pieri_text(v, tag);
      }
    } else if (*hc) {
      if (hn < 1 || hn > 8) throw domain_error("n must lie in 1..8");
      VarUniverse u{hn};
      HeckeParams prm = HeckeParams::parse(u, pp, qq, hh);
      for (const MultiPoly* m : {&prm.p, &prm.q, &prm.hbar})
        for (const auto& [mono, c] : m->terms())
          for (auto [var, e] : mono.entries())
            if (u.is_t(var) || u.is_x(var)) throw domain_error("parameters may not involve t or x");
      HeckeAlgebra H(hn, prm);
      std::vector<int> w = parse_int_list(word);
      for (int i : w)
        if (i < 1 || i >= hn) throw domain_error("generator index out of range");
      std::vector<int> xs = parse_int_list(xpow);
      if (static_cast<int>(xs.size()) > hn) throw domain_error("more exponents than variables");
      MultiPoly f = MultiPoly::constant(u, 1);
      for (std::size_t i = 0; i < xs.size(); ++i) f *= MultiPoly::var(u, u.x(static_cast<int>(i) + 1), xs[i]);
      Basis b = basis == "T" ? Basis::T : Basis::Tbar;
      HeckeElement h = H.word_times(w, HeckeElement::poly(hn, f, b));
      if (sigma_k >= 0) {
        GrassSetting s(hn, sigma_k);
        HeckeElement sig = sigma(H, s);
        h = H.mul(h, b == Basis::T ? H.to_basis(sig, Basis::T) : sig);
      }
      if (format == "json")
        out << hecke_json(h).dump() << "\n";
      else
        out << render_hecke_text(h);
    } else if (*vc) {
      vopt.workers = workers_from_env();
      std::vector<std::string> run = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      std::vector<CheckResult> all;
      bool pass = true;
      for (const auto& name : run) {
        VerifyOptions o = vopt;
        // The negative control corrupts one comparison of the first suite run.
        if (&name != &run.front()) o.inject_fault = false;
        auto rs = run_suite(name, o);
        for (auto& c : rs) {
          pass = pass && c.ok();
          c.name = name + "/" + c.name;
        }
        all.insert(all.end(), rs.begin(), rs.end());
      }
      if (format == "json") {
        out << verify_json(suite, vopt, all, pass).dump(2) << "\n";
      } else {
        out << verify_text(all);
        out << "verify " << suite << ": " << (pass ? "pass" : "FAIL") << " (" << all.size() << " checks)\n";
      }
      return pass ? ok : failure;
    } else if (*tc) {
      Partition lam(parse_int_list(shape));
      TableauKind kind = weak ? TableauKind::WeakSetValued : TableauKind::SetValued;
      if (poly) {
        VarUniverse u{max_entry};
        MultiPoly g = weak ? weak_J(lam, max_entry, max_size, u) : grothendieck_G(lam, max_entry, max_size, u);
        if (format == "json")
          out << poly_json(g).dump() << "\n";
        else
          out << g.str() << "\n";
      } else {
        auto ts = list_tableaux(lam, max_entry, max_size, kind);
        if (format == "json") {
          json arr = json::array();
          for (const auto& t : ts) arr.push_back({{"size", t.size()}, {"rows", t.rows}});
          out << json{{"shape", lam.parts()}, {"count", ts.size()}, {"tableaux", arr}}.dump() << "\n";
        } else {
          for (const auto& t : ts) out << t.str() << "\n";
          out << ts.size() << " tableaux\n";
        }
      }
    } else if (*ec) {
      out << example_text(ex_name);
    }
  } catch (const consistency_error& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  } catch (const structural_error& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return ok;
}

}  // namespace ribbon::cli
