// Acceptance suite: runs every cross-verification criterion at its
// stated tolerance (exact integer equality throughout) and prints one
// pass/fail line per criterion.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "qvs/verify.hpp"

using namespace qvs;

namespace {

void report(const CheckResult& r) {
  std::printf("[%s] %-11s %s (%s, %.2fs)\n", r.pass ? "PASS" : "FAIL",
              r.suite.c_str(), r.name.c_str(), r.detail.c_str(), r.seconds);
  std::fflush(stdout);
}

void run(const std::string& suite) {
  const auto results = run_acceptance({suite}, 20240917ULL);
  REQUIRE(results.size() == 1);
  report(results[0]);
  CHECK_MESSAGE(results[0].pass, results[0].detail);
}

}  // namespace

TEST_CASE("criterion 1: extended-root/weight multiplicity equivalence") {
  run("mult");
}
TEST_CASE("criterion 2: face lemmas over F2") { run("faces"); }
TEST_CASE("criterion 3: HN uniqueness and JH independence") { run("hnjh"); }
TEST_CASE("criterion 4: stratum criterion vs decomposition test") {
  run("cbstrata");
}
TEST_CASE("criterion 5: level-zero stable vector classification") {
  run("alevectors");
}
TEST_CASE("criterion 6: crystal character correctness") { run("crystal"); }
TEST_CASE("criterion 7: level-rank duality dimensions") { run("duality"); }
TEST_CASE("criterion 8: Maya combinatorics") { run("maya"); }
TEST_CASE("criterion 9: tensor branching agreement") { run("tensor"); }
TEST_CASE("criterion 10: local-model coupling identity") { run("localmodel"); }
