#include <doctest.h>

#ifdef POLYDYN_CLI_PATH

#include <sys/wait.h>

#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary through the shell; stderr is folded into stdout
// only when merge is set, otherwise discarded.
RunResult run_cli(const std::string& args, bool merge = false) {
  const std::string cmd = std::string(POLYDYN_CLI_PATH) + " " + args +
                          (merge ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("single-line commands print exactly one value") {
  auto r = run_cli("cfsr 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x^3 + 3/2*x\n");
  CHECK(run_cli("chebyshev 4").out == "x^4 - 4*x^2 + 2\n");
}

TEST_CASE("pcf json leads with the verdict") {
  auto r = run_cli("pcf x^2-2 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("{\n  \"verdict\": \"pcf\",\n  \"post_critical_set\": [\n"
                    "    \"-2\",\n    \"2\"\n  ],",
                    0) == 0);
}

TEST_CASE("pcf text explains the escape") {
  auto r = run_cli("pcf x^2+x+1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "verdict: not pcf"));
  CHECK(contains(r.out, "orbit of -1/2 escapes at step 0"));
  CHECK(contains(r.out, "v_2 = -1"));
}

TEST_CASE("parse failures point at the offending byte") {
  auto r = run_cli("pcf x^+2", true);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.out, "error: expected a digit"));
  CHECK(contains(r.out, "  x^+2\n    ^"));
}

TEST_CASE("discriminants through both routes") {
  auto r = run_cli("disc x^2-2 --n 2 --route both");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "recursive: D_2(t) = -256*t^3 - 512*t^2 + 1024*t + 2048"));
  CHECK(contains(r.out, "direct:    D_2(t) = -256*t^3 - 512*t^2 + 1024*t + 2048"));
  CHECK(contains(r.out, "equal: yes"));
  auto j = run_cli("disc-at x^2-2 --n 3 --t0 1 --json");
  CHECK(contains(j.out, "\"disc\": \"1358954496\""));
}

TEST_CASE("guard violations exit with the input-error code") {
  // --guard is an app-level option, so it precedes the subcommand
  auto r = run_cli("--guard 1000 disc x^2-2 --n 25", true);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.out, "exceeds guard"));
}

TEST_CASE("ramified output and hypothesis rejections") {
  auto ok = run_cli("ramified x^2-2 --t0 1");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "post-critical set: {-2, 2}"));
  CHECK(contains(ok.out, "S = {2, 3} together with the real place"));
  auto bad = run_cli("ramified x^2+1 --t0 0", true);
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.out, "not post-critically finite"));
}

TEST_CASE("wild report text carries the bound comparison") {
  auto r = run_cli("wild x^2-2 --p 2 --t0 1 --n 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "v_2(disc) = 24"));
  CHECK(contains(r.out, "bound n*d^n = 24"));
  CHECK(contains(r.out, "satisfied: yes"));
}

TEST_CASE("eisenstein without a certificate still succeeds") {
  auto r = run_cli("eisenstein x^2-2 --t0 2 --n 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "no Eisenstein certificate"));
  auto j = run_cli("eisenstein x^2-2 --t0 1 --n 2 --json");
  CHECK(contains(j.out, "\"eisenstein\": true"));
  CHECK(contains(j.out, "\"shift\": \"1\""));
}

TEST_CASE("monogenic certificates and named rejections") {
  auto ok = run_cli("monogenic-x2m2 --t0 1 --n 3");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "D_3 = 1358954496"));
  auto rej = run_cli("monogenic-x2m2 --t0 7 --n 2", true);
  CHECK(rej.exit_code == 2);
  CHECK(contains(rej.out,
                 "error: hypothesis failed (t0 = 0 or 1 mod 4): t0 = 3 mod 4"));
}

TEST_CASE("normal form accepts negative positionals after the separator") {
  auto r = run_cli("normal-form -- 1 0 -2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "r = 2"));
  CHECK(contains(r.out, "normal form: x^2 - 2"));
}

TEST_CASE("splitting table text matches the census rows") {
  auto r = run_cli("splitting-table x^2+8 --p 13 --t0 11 --N 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "p = 13, t0 = 11"));
  CHECK(contains(r.out, "   1       2   1: 2/2"));
  CHECK(contains(r.out, "   2       4   1: 4/4"));
  CHECK(contains(r.out, "   3       8   1: 2/2 2: 3/3"));
}

TEST_CASE("splitting table flags repeated factors") {
  auto r = run_cli("splitting-table x^2-2 --p 7 --t0 5 --N 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "   1       2 * 1: 1/2"));
  CHECK(contains(r.out, "* repeated factors at this level"));
}

TEST_CASE("splitting check output is independent of the job count") {
  const std::string args = "splitting-check x^2+8 --p 13 --t0 11 --nmax 4 --kmax 3";
  auto a = run_cli(args + " --jobs 1");
  auto b = run_cli(args + " --jobs 2");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "all cells match: yes"));
  auto bad = run_cli(args + " --jobs 99", true);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("graph exports dot with the reduced base point highlighted") {
  auto r = run_cli("graph x^2+8 --p 13 --k 1 --dot --highlight 11");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("digraph functional_graph {", 0) == 0);
  CHECK(contains(r.out, "\"11\" [style=filled, fillcolor=lightgray];"));
  CHECK(contains(r.out, "\"0\" -> \"8\";"));
}

TEST_CASE("graph structure text lists components and period") {
  auto r = run_cli("graph-structure x^2+8 --p 13 --k 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "components: 2"));
  CHECK(contains(r.out, "cycle length 2 (cycle: 5 7)"));
  CHECK(contains(r.out, "cycle length 3 (cycle: 9 11 12)"));
  CHECK(contains(r.out, "period = 6"));
  CHECK(contains(r.out, "stabilizes at n = 2"));
}

TEST_CASE("usage errors name the flag and show an example") {
  auto r = run_cli("tame x^2-2 --t0 1 --bogus", true);
  CHECK(r.exit_code == 2);
  CHECK(contains(r.out, "--bogus"));
  CHECK(contains(r.out, "example: polydyn tame"));
  auto none = run_cli("", true);
  CHECK(none.exit_code == 2);
  CHECK(contains(none.out, "subcommand is required"));
}

TEST_CASE("byte-identical reruns") {
  for (const std::string args :
       {std::string("disc x^2-2 --n 3 --json"),
        std::string("splitting-table x^2+8 --p 13 --t0 11 --N 5"),
        std::string("graph x^2+8 --p 13 --k 2 --json")}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

}  // TEST_SUITE

#endif  // POLYDYN_CLI_PATH
