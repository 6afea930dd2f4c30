#pragma once

/// \file
/// Exhaustive verification: equidistribution checks, map checks
/// (well-definedness, involution or bijection, element-wise statistic
/// transfer), generating-function identities and named suites.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "permstat/distribution.hpp"

namespace permstat {

struct Report {
  std::string suite;
  std::string check;
  int n = 0;
  bool pass = false;
  std::string witness;  // empty on PASS
  std::string detail;
  std::optional<nlohmann::json> table;
};

nlohmann::json to_json(const Report& r);
/// "[PASS] suite/check n=5  detail" plus an indented witness line on FAIL.
std::string to_text(const Report& r);

struct HarnessOptions {
  unsigned workers = 1;
  /// Raises the S_n cap from 8 to 9.
  bool extended = false;
  /// Attach distribution tables to equidistribution reports.
  bool include_tables = false;
};

inline constexpr int kSuiteMaxS = 8;
inline constexpr int kSuiteMaxSExtended = 9;
inline constexpr int kSuiteMaxI = 7;
inline constexpr int kSuiteMaxPT = 7;

using StatPairs = std::vector<std::pair<std::string, std::string>>;

/// PASS iff the joint distribution of `stats_a` over `domain_a` equals that
/// of `stats_b` over `domain_b`. The witness is the smallest key whose counts
/// differ, with both counts.
Report check_equidistribution(int n, Domain domain_a, const std::vector<std::string>& stats_a, Domain domain_b,
                              const std::vector<std::string>& stats_b, const HarnessOptions& opts = {});
Report check_equidistribution(int n, Domain domain, const std::vector<std::string>& stats_a,
                              const std::vector<std::string>& stats_b, const HarnessOptions& opts = {});

enum class MapMode { involution, bijection };

/// Registered maps: varphi, chi321, phi_swap, rho, rho_inv, gamma_insert,
/// alpha, beta, code_b, code_b_inv, phi_zigzag, gamma_cn.
std::vector<std::string> map_names();

/// Each pair (a, b) asserts a(x) = b(f(x)) for every x in the domain, with
/// `a` read on the domain and `b` on the codomain. The witness is the first
/// counterexample in enumeration order.
Report check_map(int n, std::string_view map_name, MapMode mode, const StatPairs& transfers,
                 const HarnessOptions& opts = {});

/// Sum of x^(wnm-1) y^rlm over S_n against the rising factorial, and, for
/// n <= kSuiteMaxPT, the same for x^(urr-1) y^topone over PT(n).
Report check_gf(int n, const HarnessOptions& opts = {});

/// (rlm, rlmin, lrmax, des, ides, u321) against (rlm, lrmax, rlmin, des, ides, u321) over S_n.
Report check_conjecture21(int n, const HarnessOptions& opts = {});

/// urr = rlmin o Gamma, topone = rlm o Gamma, urr = wnm o Phi, and both maps
/// bijective onto S_n.
Report check_tableaux(int n, const HarnessOptions& opts = {});

/// Runs `predicate` over every object of the domain; it returns a failure
/// message or nothing. PASS iff no object fails.
Report check_property(std::string suite, std::string check, int n, Domain domain,
                      const std::function<std::optional<std::string>(const Object&)>& predicate,
                      const HarnessOptions& opts = {});

/// all, gf, thm11, thm12, thm13, thm14, blocks, gamma, baril, tableaux, conjecture
std::vector<std::string> suite_names();

/// Runs the named suite for n = 1..max_n. Checks over I_n and PT(n) stop at
/// their own caps. Throws InputError for an unknown suite or a max_n above
/// the S_n cap.
std::vector<Report> run_suite(std::string_view suite, int max_n, const HarnessOptions& opts = {});

bool all_pass(const std::vector<Report>& reports);
nlohmann::json reports_to_json(std::string_view suite, int max_n, const std::vector<Report>& reports);

}  // namespace permstat
