#include "doctest.h"
#include "permstat/harness.hpp"

using namespace permstat;

TEST_CASE("equidistribution checks") {
  const auto five = check_equidistribution(6, Domain::permutations, {"rlm", "rlmin", "wnm", "des", "u321"},
                                           {"rlm", "wnm", "rlmin", "des", "u321"});
  CHECK(five.pass);
  CHECK(check_equidistribution(1, Domain::permutations, {"des"}, {"asc"}).pass);

  const auto bad = check_equidistribution(3, Domain::permutations, {"des"}, {"rlm"});
  CHECK_FALSE(bad.pass);
  CHECK(bad.witness.find("key (") == 0);
  CHECK_THROWS_AS(check_equidistribution(3, Domain::permutations, {"des"}, {"rlm", "asc"}), InputError);

  HarnessOptions with_tables;
  with_tables.include_tables = true;
  CHECK(check_equidistribution(3, Domain::permutations, {"des"}, {"asc"}, with_tables).table.has_value());
}

TEST_CASE("map checks") {
  CHECK(check_map(6, "varphi", MapMode::involution,
                  {{"rlmin", "wnm"}, {"wnm", "rlmin"}, {"rlm", "rlm"}, {"des", "des"}, {"u321", "u321"}})
            .pass);
  CHECK(check_map(6, "code_b", MapMode::bijection, {}).pass);
  CHECK(check_map(6, "beta", MapMode::bijection, {{"rlm", "rlmax-1"}, {"wnm", "rlmin"}, {"asc", "asc"}}).pass);
  CHECK(check_map(5, "rho", MapMode::bijection, {{"rlm", "lrmax-1"}}).pass);
  CHECK(check_map(5, "code_b_inv", MapMode::bijection, {}).pass);
  CHECK(check_map(4, "phi_zigzag", MapMode::bijection, {{"urr", "wnm"}}).pass);

  const auto wrong = check_map(4, "varphi", MapMode::involution, {{"des", "asc"}});
  CHECK_FALSE(wrong.pass);
  CHECK(wrong.witness.find("1 2 3 4 -> 1 2 3 4") == 0);

  CHECK_FALSE(check_map(6, "beta", MapMode::involution, {}).pass);
  CHECK_THROWS_AS(check_map(3, "nope", MapMode::bijection, {}), InputError);
  CHECK_THROWS_AS(check_map(1, "phi_swap", MapMode::involution, {}), InputError);
  CHECK_THROWS_AS(check_map(3, "code_b", MapMode::involution, {}), InputError);
}

TEST_CASE("generating function, tableaux and the six-statistic check") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(check_gf(n).pass);
    CHECK(check_tableaux(n).pass);
    CHECK(check_conjecture21(n).pass);
  }
  CHECK(check_gf(3).detail.find("x^2 + 2*x*y + y^2 + x + y") == 0);
  CHECK_THROWS_AS(check_gf(0), InputError);
  CHECK_THROWS_AS(check_gf(9), InputError);
  CHECK_THROWS_AS(check_tableaux(8), InputError);
}

TEST_CASE("suites") {
  CHECK(suite_names().front() == "all");
  for (const auto& name : suite_names()) {
    const auto reports = run_suite(name, 5);
    CHECK_MESSAGE(all_pass(reports), name);
    CHECK_FALSE(reports.empty());
  }
  CHECK_THROWS_AS(run_suite("nope", 3), InputError);
  CHECK_THROWS_AS(run_suite("gf", 9), InputError);
  CHECK_THROWS_AS(run_suite("gf", 0), InputError);
}

TEST_CASE("the set-level discrepancy is pinned at n = 5") {
  const auto reports = run_suite("baril", 5);
  bool seen = false;
  for (const auto& r : reports) {
    if (r.check != "ides-dist-set-discrepancy") continue;
    seen = true;
    CHECK(r.pass);
    CHECK(r.detail.find("24135: IDES={1,3} DIST(b)={3,4}") != std::string::npos);
  }
  CHECK(seen);
}

TEST_CASE("reports") {
  Report r;
  r.suite = "s";
  r.check = "c";
  r.n = 3;
  r.witness = "w";
  CHECK(to_text(r) == "[FAIL] s/c n=3\n    witness: w\n");
  CHECK(to_json(r)["status"] == "FAIL");
  const auto j = reports_to_json("s", 3, {r});
  CHECK(j["failed"] == 1);
  CHECK(j["status"] == "FAIL");
}
