// One line per acceptance criterion: [PASS]/[FAIL], id, title, runtime.
// Every comparison is exact; a runtime budget, where one is stated, is part
// of the criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ribbon/cli.hpp"
#include "ribbon/ribbonops.hpp"
#include "ribbon/verify.hpp"

using namespace ribbon;
using json = nlohmann::json;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome from_checks(const std::vector<CheckResult>& rs) {
  Outcome o;
  long cases = 0;
  for (const auto& r : rs) {
    cases += r.cases;
    if (r.report_only || r.ok()) continue;
    o.ok = false;
    if (o.detail.empty())
      o.detail = r.name + " " + r.setting + (r.counterexamples.empty() ? "" : ": " + r.counterexamples.front());
  }
  if (o.ok) o.detail = std::to_string(rs.size()) + " checks, " + std::to_string(cases) + " cases";
  return o;
}

void append(std::vector<CheckResult>& into, std::vector<CheckResult> more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

// Runs the CLI in-process and reads its JSON expansion back.
GrassVector cli_pieri(const std::vector<std::string>& args, int n) {
  std::vector<std::string> full{"ribbon-pieri", "pieri"};
  full.insert(full.end(), args.begin(), args.end());
  for (const char* a : {"--format", "json"}) full.emplace_back(a);
  std::vector<char*> argv;
  for (auto& a : full) argv.push_back(a.data());
  std::ostringstream out, err;
  int rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (rc != 0) throw std::runtime_error("pieri exited " + std::to_string(rc) + ": " + err.str());
  VarUniverse u{n};
  GrassVector g;
  json j = json::parse(out.str());
  for (const auto& t : j["terms"])
    accumulate(g, Partition(t["mu"].get<std::vector<int>>()), MultiPoly::parse(u, t["coeff"].get<std::string>()));
  return g;
}

// Summands may repeat a partition; they are added.
GrassVector expected(int n, const std::vector<std::pair<std::vector<int>, std::string>>& summands) {
  VarUniverse u{n};
  GrassVector g;
  for (const auto& [mu, c] : summands) accumulate(g, Partition(mu), MultiPoly::parse(u, c));
  return g;
}

Outcome compare_golden(const GrassVector& got, const GrassVector& want, std::size_t classes) {
  Outcome o;
  if (got != want) return {false, "got " + vec_str(got) + " want " + vec_str(want)};
  if (want.size() != classes) return {false, "golden lists " + std::to_string(want.size()) + " classes"};
  o.detail = std::to_string(classes) + " classes equal";
  return o;
}

const std::vector<GrassSetting> kOracleSettings{{3, 1}, {4, 2}, {5, 2}, {5, 3}, {6, 3}};

}  // namespace

int main() {
  int failures = 0;
  auto criterion = [&](int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs >= budget_s) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(budget_s)) + " s budget";
    }
    failures += !o.ok;
    char time[32];
    std::snprintf(time, sizeof time, "%.2f s", secs);
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << time << ") " << o.detail << std::endl;
  };

  criterion(1, "golden motivic Chern expansion, Gr(2,5), lambda=(2,0), r=2", 1, [] {
    GrassVector got = cli_pieri({"--n", "5", "--k", "2", "--class", "MC", "--lambda", "2,0", "--r", "2"}, 5);
    GrassVector want = expected(5, {{{2, 0}, "t1*t4"},
                                    {{2, 1}, "(1+y)*(1-t2)*t4"},
                                    {{2, 2}, "-y*(1+y)*(1-t3)*t4"},
                                    {{3, 0}, "(1+y)*t1*(1-t5)"},
                                    {{3, 1}, "(1+y)^2*(1-t2)*(1-t5)"},
                                    {{3, 2}, "-y*(1+y)^2*(1-t3)*(1-t5)"},
                                    {{3, 3}, "y^2*(1+y)^2*(1-t4)*(1-t5)"},
                                    {{3, 3}, "y^2*(1+y)*t4*(1-t5)"}});
    return compare_golden(got, want, 7);
  });

  criterion(2, "golden Segre motivic expansion, Gr(3,5), lambda=(1,1,0), r=2", 1, [] {
    GrassVector got = cli_pieri({"--n", "5", "--k", "3", "--class", "SMC", "--lambda", "1,1,0", "--r", "2"}, 5);
    GrassVector want =
        expected(5, {{{1, 1, 0}, "t1*t3 + t1*t4 + t3*t4"},
                     {{2, 1, 0}, "(1+y)*(t1+t3)*(1-t4)"},
                     {{1, 1, 1}, "(1+y)*(t3+t4)*(1-t1)"},
                     {{2, 1, 1}, "(1+y)^2*(1-t1)*(1-t4)"},
                     {{2, 2, 0}, "(1+y)^2*(1-t3)*(1-t4) + (1+y)*(1-t3)*(t1+t4)"},
                     {{2, 2, 1}, "(1+y)^2*(1-t1)*(1-t3)"},
                     {{2, 2, 2}, "-y*(1+y)*(1-t1)*(t3+t4) - y*(1+y)^2*(1-t1)*(1-t4) - y*(1+y)^2*(1-t1)*(1-t3)"}});
    return compare_golden(got, want, 7);
  });

  criterion(3, "ribbon Pieri equals the representation oracle, every class kind", 600, [] {
    std::vector<CheckResult> rs;
    for (const auto& s : kOracleSettings) {
      Comparator cmp(false);
      rs.push_back(check_pieri_oracle(s, cmp));
    }
    return from_checks(rs);
  });

  criterion(4, "Hecke relations (n<=4), monomial and elementary theorems up to (3,6)", 600, [] {
    std::vector<CheckResult> rs;
    for (int n = 2; n <= 4; ++n) {
      Comparator cmp(false);
      append(rs, check_hecke_relations(n, 1, cmp));
    }
    for (const auto& s : settings_upto(6, 3)) {
      Comparator cmp(false);
      append(rs, check_hecke_symmetrizer(s, 1, 3, cmp));
    }
    return from_checks(rs);
  });

  criterion(5, "operator sum equalities and refined-operator claims up to (3,6)", 0, [] {
    std::vector<CheckResult> rs;
    for (const auto& s : settings_upto(6, 3)) {
      Comparator cmp(false);
      append(rs, check_appendix(s, cmp));
    }
    return from_checks(rs);
  });

  criterion(6, "specialization ladder: y=0, Schubert vertical strips, Lenart support", 0, [] {
    std::vector<CheckResult> rs;
    for (const auto& s : settings_upto(6, 3)) {
      Comparator cmp(false);
      for (auto& r : check_specializations(s, cmp))
        if (r.name == "y-zero" || r.name == "schubert-vertical-strips" || r.name == "structure-sheaf-lenart")
          rs.push_back(std::move(r));
    }
    if (rs.size() != 3 * settings_upto(6, 3).size()) return Outcome{false, "missing specialization checks"};
    return from_checks(rs);
  });

  criterion(7, "ribbon intertwining factor identity, every rectangle with n<=7", 0, [] {
    std::vector<CheckResult> rs;
    for (const auto& s : settings_upto(7)) {
      Comparator cmp(false);
      for (auto& r : check_intertwining(s, cmp))
        if (r.name == "ribbon-factor-identity") rs.push_back(std::move(r));
    }
    return from_checks(rs);
  });

  criterion(8, "projective line ledger", 0, [] {
    Comparator cmp(false);
    return from_checks({check_projective_line(cmp)});
  });

  criterion(9, "dualizing-sheaf theorem at (1,2), (1,3), (2,4)", 300, [] {
    std::vector<CheckResult> rs;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}}) {
      Comparator cmp(false);
      append(rs, check_theorem_E(GrassSetting(n, k), cmp));
    }
    return from_checks(rs);
  });

  std::cout << (failures ? "acceptance: FAIL (" + std::to_string(failures) + " criteria)" : "acceptance: pass")
            << std::endl;
  return failures ? 1 : 0;
}
