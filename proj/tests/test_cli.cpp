#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ribbon/cli.hpp"
#include "ribbon/ribbonops.hpp"

using namespace ribbon;
using json = nlohmann::json;

namespace {

struct Run {
  std::string out;
  int rc = -1;
};

// Runs the installed binary with the given arguments; stdout only.
Run run(const std::string& args) {
  const char* bin = std::getenv("RIBBON_PIERI_BIN");
  if (!bin) throw std::runtime_error("RIBBON_PIERI_BIN is not set");
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) throw std::runtime_error("popen failed");
  Run r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, got);
  int st = pclose(f);
  r.rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("motivic Chern golden in text form") {
  Run r = run("pieri --n 5 --k 2 --class MC --lambda 2,0 --r 2");
  REQUIRE(r.rc == 0);
  CHECK(count_lines(r.out) == 7);
  CHECK(r.out.rfind("t1*t4 * MC[2,0]\n", 0) == 0);
  CHECK(contains(r.out, "(-y*t2*t4 + y*t4 - t2*t4 + t4) * MC[2,1]\n"));
  CHECK(contains(r.out, "(-y*t1*t5 + y*t1 - t1*t5 + t1) * MC[3,0]\n"));
  CHECK(contains(r.out, "(y^2*t3*t4 - y^2*t4 + y*t3*t4 - y*t4) * MC[2,2]\n"));
}

TEST_CASE("JSON output round-trips to the library expansion") {
  for (const char* cls : {"S", "I", "O", "CSM", "SM", "MC", "SMC"}) {
    Run r = run(std::string("pieri --n 5 --k 2 --class ") + cls + " --lambda 1,0 --r 2 --format json");
    REQUIRE(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["class"] == cls);
    CHECK(j["n"] == 5);
    CHECK(j["k"] == 2);
    CHECK(j["r"] == 2);
    GrassSetting s(5, 2);
    VarUniverse u{5};
    GrassVector got;
    for (const auto& t : j["terms"])
      accumulate(got, Partition(t["mu"].get<std::vector<int>>()),
                 MultiPoly::parse(u, t["coeff"].get<std::string>()));
    GrassVector want = pieri(*parse_class_kind(cls), Partition({1, 0}), 2, s);
    CHECK(got == want);
  }
}

TEST_CASE("r = 0 is the identity") {
  Run r = run("pieri --n 4 --k 2 --class CSM --lambda 1,1 --r 0");
  CHECK(r.rc == 0);
  CHECK(r.out == "1 * CSM[1,1]\n");
}

TEST_CASE("opposite cells agree with the twisted route") {
  Run r = run("pieri --n 4 --k 2 --class MC --lambda 1,0 --r 1 --opposite --format json");
  REQUIRE(r.rc == 0);
  json j = json::parse(r.out);
  VarUniverse u{4};
  GrassVector got;
  for (const auto& t : j["terms"])
    accumulate(got, Partition(t["mu"].get<std::vector<int>>()), MultiPoly::parse(u, t["coeff"].get<std::string>()));
  CHECK(got == pieri_opposite_twisted(ClassKind::MotivicChern, Partition({1, 0}), 1, GrassSetting(4, 2)));
  CHECK(run("pieri --n 4 --k 2 --class SMC --lambda 1,0 --r 1 --opposite").rc == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("pieri --n 5 --k 2 --class MC --lambda 4,0 --r 1").rc == 2);
  CHECK(run("pieri --n 5 --k 2 --class XYZ --lambda 0,0 --r 1").rc == 2);
  CHECK(run("pieri --n 5 --class MC --lambda 0,0 --r 1").rc == 2);
  CHECK(run("pieri --n 5 --k 2 --class MC --lambda 0,0 --r 3").rc == 2);
  CHECK(run("hecke --n 2 --word 2").rc == 2);
  CHECK(run("hecke --n 2 --word 1 --p t1").rc == 2);
  CHECK(run("verify --suite nosuch").rc == 2);
  CHECK(run("").rc == 2);
  CHECK(run("--help").rc == 0);
}

TEST_CASE("hecke normal ordering") {
  Run r = run("hecke --n 2 --word 1 --x 1");
  REQUIRE(r.rc == 0);
  CHECK(r.out == "(-p*x2 + q*x2 + hbar) * Tbar[12]\nx2 * Tbar[21]\n");
  Run j = run("hecke --n 2 --word 1 --x 1 --format json");
  REQUIRE(j.rc == 0);
  json a = json::parse(j.out);
  REQUIRE(a.size() == 2);
  CHECK(a[0]["perm"] == "12");
  CHECK(a[1]["perm"] == "21");
  // Quadratic relation at specialized parameters: Tbar_1^2 = (p-q) Tbar_1 + pq.
  Run q = run("hecke --n 2 --word 1,1 --p 3 --q 2");
  REQUIRE(q.rc == 0);
  CHECK(contains(q.out, "6 * Tbar[12]"));
  CHECK(contains(q.out, "1 * Tbar[21]"));
}

TEST_CASE("verify passes and the armed fault is reported") {
  Run ok = run("verify --suite amonomial --n-max 5");
  CHECK(ok.rc == 0);
  CHECK(contains(ok.out, "verify amonomial: pass"));
  CHECK_FALSE(contains(ok.out, "[FAIL]"));
  Run all = run("verify --suite all --n-max 4");
  CHECK(all.rc == 0);
  CHECK_FALSE(contains(all.out, "[FAIL]"));
  Run bad = run("verify --suite amonomial --n-max 3 --inject-fault");
  CHECK(bad.rc == 3);
  CHECK(contains(bad.out, "[FAIL]"));
  CHECK(contains(bad.out, "counterexample:"));
  Run js = run("verify --suite appendix-equiv --n-max 4 --format json");
  CHECK(js.rc == 0);
  CHECK(json::accept(js.out));
}

TEST_CASE("output is deterministic") {
  const std::string a = "verify --suite amonomial --n-max 4 --seed 7";
  CHECK(run(a).out == run(a).out);
  const std::string b = "pieri --n 6 --k 3 --class SMC --lambda 2,1,0 --r 3 --format json";
  CHECK(run(b).out == run(b).out);
}

TEST_CASE("tableaux and examples") {
  Run t = run("tableaux --shape 1 --max-entry 2 --max-size 2");
  REQUIRE(t.rc == 0);
  CHECK(contains(t.out, "[12]\n"));
  CHECK(contains(t.out, "3 tableaux"));
  Run w = run("tableaux --shape 1 --max-entry 2 --max-size 2 --weak");
  REQUIRE(w.rc == 0);
  CHECK(contains(w.out, "5 tableaux"));
  Run p = run("tableaux --shape 1 --max-entry 2 --max-size 2 --poly --format json");
  REQUIRE(p.rc == 0);
  CHECK(json::parse(p.out).size() == 3);
  for (const char* name : {"intro", "segre", "projective-line"}) {
    Run e = run(std::string("example --name ") + name);
    CHECK(e.rc == 0);
    CHECK_FALSE(e.out.empty());
  }
  CHECK(run("example --name nosuch").rc == 2);
}
