/// @file test_cli.cpp
/// @brief End-to-end tests of the command-line driver.  The binary under
///        test is named by the QSERIES_BIN environment variable (set by the
///        build); every case runs it as a subprocess and inspects stdout
///        and the exit status.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("QSERIES_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "QSERIES_BIN must point at the driver");
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += (c == '\n');
  return n;
}

}  // namespace

TEST_CASE("expand: documented leading terms") {
  auto g = run_cli("expand \"g 1 1 0 0\"");
  CHECK(g.exit_code == 0);
  CHECK(first_line(g.out) == "q^(1/8): -1");

  auto eta = run_cli("expand eta --cutoff 2");
  CHECK(eta.exit_code == 0);
  CHECK(eta.out == "q^(1/24): 1\nq^(25/24): -1\n");

  auto th = run_cli("expand \"theta 3 3\" --cutoff 1");
  CHECK(th.exit_code == 0);
  CHECK(th.out == "q^(3/4): 2\n");
}

TEST_CASE("expand: rational cutoffs are honored exclusively") {
  /* 49/24 is itself an eta exponent; the cutoff must exclude it. */
  auto r = run_cli("expand eta --cutoff 49/24");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "q^(1/24): 1\nq^(25/24): -1\n");
}

TEST_CASE("expand: eta equals its signed-theta form") {
  auto lhs = run_cli("expand eta --cutoff 5");
  auto rhs = run_cli("expand \"theta- 1/2 3/2\" --cutoff 5");
  CHECK(lhs.exit_code == 0);
  CHECK(rhs.exit_code == 0);
  CHECK(lhs.out == rhs.out);
  CHECK(count_lines(lhs.out) >= 3);
}

TEST_CASE("expand: blocks render slot by slot") {
  auto r = run_cli("expand \"phi 1 1 0\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "slot 0:\nq^(0): -2\nslot 1:\nq^(1/4): -1\n");
}

TEST_CASE("expand: json output round-trips the documented schema") {
  auto r = run_cli("expand \"g 1 1 0 0\" --format json");
  CHECK(r.exit_code == 0);
  auto js = nlohmann::json::parse(r.out);
  REQUIRE(js.is_array());
  REQUIRE(!js.empty());
  CHECK(js[0]["exponent"] == "1/8");
  CHECK(js[0]["coefficient"] == "-1");

  auto b = run_cli("expand \"phi 1 1 0\" --format json");
  CHECK(b.exit_code == 0);
  auto bj = nlohmann::json::parse(b.out);
  CHECK(bj["two_m"] == 2);
  REQUIRE(bj["slots"].is_object());
  CHECK(bj["slots"]["0"][0]["coefficient"] == "-2");
  CHECK(bj["slots"]["1"][0]["exponent"] == "1/4");
}

TEST_CASE("verify: matching records pass and summarize") {
  auto r = run_cli("verify --filter \"m1-prop-*\"");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 5);  // four records plus the summary line
  CHECK(r.out.find("PASS  m1-prop-i ") != std::string::npos);
  CHECK(r.out.find("-- 4 records: 4 pass, 0 fail, 0 error") !=
        std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify: json reports carry exactly the documented fields") {
  auto r = run_cli("verify --filter \"T-g-*\" --format json");
  CHECK(r.exit_code == 0);
  auto js = nlohmann::json::parse(r.out);
  REQUIRE(js.is_array());
  REQUIRE(js.size() == 3);
  for (const auto& rec : js) {
    CHECK(rec.size() == 7);
    CHECK(rec.contains("id"));
    CHECK(rec.contains("status"));
    CHECK(rec.contains("mode"));
    CHECK(rec.contains("cutoff"));
    CHECK(rec.contains("max_abs_residual"));
    CHECK(rec.contains("first_mismatch"));
    CHECK(rec.contains("seconds"));
    CHECK(rec["status"] == "pass");
    CHECK(rec["seconds"] == 0.0);  // timings are opt-in for determinism
  }
}

TEST_CASE("verify: identical configuration gives byte-identical output") {
  const std::string args =
      "verify --filter \"S-eta\" --format json --seed 7 --count 3";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  auto c = run_cli("verify --filter \"eta-*\"");
  auto d = run_cli("verify --filter \"eta-*\"");
  CHECK(c.exit_code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("transform: direct checks of both generators") {
  auto t = run_cli("transform T g 1");
  CHECK(t.exit_code == 0);
  CHECK(t.out.rfind("PASS", 0) == 0);

  auto s = run_cli("transform S g 1 --cutoff 12 --count 2");
  CHECK(s.exit_code == 0);
  CHECK(s.out.rfind("PASS", 0) == 0);
  CHECK(s.out.find("max|residual|") != std::string::npos);

  auto h = run_cli("transform S h 1 --count 2");
  CHECK(h.exit_code == 0);

  auto sm = run_cli("transform S theta- 2 --count 2");
  CHECK(sm.exit_code == 0);
}

TEST_CASE("transform: explicit tau overrides seeded sampling") {
  const std::string args = "transform S theta 2 --tau 0.3,1.1 --format json";
  auto a = run_cli(args);
  CHECK(a.exit_code == 0);
  auto js = nlohmann::json::parse(a.out);
  CHECK(js[0]["cutoff"].get<std::string>().find("0.3") != std::string::npos);
  auto b = run_cli(args);
  CHECK(a.out == b.out);
}

TEST_CASE("catalog: listing and filtering") {
  auto all = run_cli("catalog");
  CHECK(all.exit_code == 0);
  CHECK(all.out.find("m1-prop-i ") != std::string::npos);
  CHECK(all.out.find("S-g-m2") != std::string::npos);
  CHECK(count_lines(all.out) >= 50);

  auto some = run_cli("catalog --filter \"phi-special-*\"");
  CHECK(some.exit_code == 0);
  CHECK(count_lines(some.out) == 8);
}

TEST_CASE("usage errors exit nonzero") {
  CHECK(run_cli("expand nonsense").exit_code == 2);
  CHECK(run_cli("expand \"g 1 1\"").exit_code == 2);          // wrong arity
  CHECK(run_cli("expand eta --cutoff -3").exit_code == 2);    // not positive
  CHECK(run_cli("expand eta --cutoff 1/0").exit_code == 2);   // malformed
  CHECK(run_cli("verify --filter zzz").exit_code == 2);       // empty match
  CHECK(run_cli("transform S q 1").exit_code == 2);           // bad family
  CHECK(run_cli("verify --tau 0.3,-1").exit_code == 2);       // im <= 0
  CHECK(run_cli("").exit_code != 0);                          // no subcommand
}

TEST_CASE("domain errors from the library exit with status 1") {
  auto r = run_cli("expand \"g 3 1 0 0\"");  // flavor must be 1 or 2
  CHECK(r.exit_code == 1);
  CHECK(run_cli("expand \"f 9\"").exit_code == 1);
  CHECK(run_cli("expand \"phi 0 1 0\"").exit_code == 1);
}
