#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "permstat/blocks.hpp"
#include "permstat/harness.hpp"
#include "permstat/invseq.hpp"
#include "permstat/one_n.hpp"
#include "permstat/tableau.hpp"

using namespace permstat;

namespace {

constexpr double kGoldenLimitSeconds = 1.0;
constexpr double kGfLimitSeconds = 120.0;
constexpr double kSixStatLimitSeconds = 600.0;

struct Outcome {
  bool pass = true;
  std::string note;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome from_reports(const std::vector<Report>& reports) {
  Outcome o;
  for (const auto& r : reports) {
    if (r.pass) continue;
    o.pass = false;
    if (o.note.empty()) o.note = r.suite + "/" + r.check + " n=" + std::to_string(r.n) + ": " + r.witness;
  }
  if (o.pass) o.note = std::to_string(reports.size()) + " checks";
  return o;
}

std::vector<Report> only(const std::vector<Report>& reports, const std::vector<std::string>& checks) {
  std::vector<Report> out;
  for (const auto& r : reports)
    for (const auto& c : checks)
      if (r.check == c) out.push_back(r);
  return out;
}

Outcome golden() {
  Outcome o;
  auto expect = [&](const std::string& what, const std::string& got, const std::string& want) {
    if (got == want) return;
    o.pass = false;
    if (o.note.empty()) o.note = what + ": got " + got + ", want " + want;
  };
  auto P = [](const char* s) { return parse_permutation(s); };
  auto S = [](const char* s) { return parse_inversion_sequence(s); };
  auto perm = [](const Permutation& p) { return format_permutation(p, ","); };
  auto seq = [](const InversionSequence& s) { return format_inversion_sequence(s); };

  const auto fig = parse_tableau("11 5\n6,6,5,3,1\n011001\n000111\n00001\n011\n1\n");
  expect("Phi", perm(phi_zigzag(fig)), "8,6,1,5,3,4,9,2,7,11,10");
  expect("Gamma", perm(gamma_cn(fig)), "9,4,6,5,2,8,3,1,7,11,10");
  expect("chi", perm(reverse_complement_core(P("123468759"))), "1,2,3,4,8,6,5,7,9");
  expect("varphi", perm(varphi(P("10,2,6,11,1,8,13,3,5,9,4,12,7"))), "9,4,5,11,1,6,10,2,8,12,7,13,3");
  expect("rho", perm(rho(P("372514869"))), "5,2,7,4,9,6,8,3,1");
  expect("phi_swap", perm(phi_swap(P("3 8 2 5 1 4 9 6 10 7"))), "5,2,8,4,10,6,9,3,1,7");
  expect("gamma", seq(gamma_insert(S("00113213"))), "01132130");
  expect("gamma", seq(gamma_insert(S("00210"))), "00102");
  expect("b", seq(code_b(P("24135"))), "00210");
  expect("b", seq(code_b(P("14352"))), "00102");
  const auto t = alpha_trace(P("35241"));
  const std::string chain = format_permutation(t.input, "") + " " + format_permutation(t.complemented, "") + " " +
                            format_permutation(t.inverted, "") + " " + seq(t.coded) + " " + seq(t.swapped) + " " +
                            format_permutation(t.decoded, "") + " " + format_permutation(t.reinverted, "") + " " +
                            format_permutation(t.result, "");
  expect("alpha chain", chain, "35241 31425 24135 00210 00102 14352 15324 51342");
  expect("beta", format_permutation(beta(P("593721684")), ""), "624981573");
  if (o.pass) o.note = "12 vectors";
  return o;
}

Outcome gf() {
  std::vector<Report> reports;
  for (int n = 1; n <= 8; ++n) reports.push_back(check_gf(n));
  return from_reports(reports);
}

Outcome transfer_suites() {
  std::vector<Report> reports;
  for (const char* suite : {"thm11", "thm12", "thm13", "thm14"}) {
    const auto part = run_suite(suite, 8);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  return from_reports(reports);
}

Outcome structural() {
  std::vector<Report> reports;
  for (const auto& r : run_suite("tableaux", 7)) reports.push_back(r);
  for (const auto& r : run_suite("blocks", 8)) reports.push_back(r);
  for (const auto& r : run_suite("gamma", 7)) reports.push_back(r);
  for (const auto& r : only(run_suite("baril", 7), {"slice-invariants", "inverse-round-trip"})) reports.push_back(r);
  return from_reports(reports);
}

Outcome baril() {
  const auto reports = run_suite("baril", 7);
  const auto picked = only(reports, {"position-sets", "des-ides-vs-asc-dist", "ides-dist-set-discrepancy"});
  auto o = from_reports(picked);
  for (const auto& r : picked)
    if (r.check == "ides-dist-set-discrepancy" && r.pass) o.note += "; " + r.detail;
  return o;
}

Outcome six_stat(bool extended) {
  std::vector<Report> reports;
  const int top = extended ? 9 : 8;
  for (int n = 1; n <= top; ++n) reports.push_back(check_conjecture21(n));
  auto o = from_reports(reports);
  o.note += extended ? " (n <= 9)" : " (n <= 8; n = 9 with --extended)";
  return o;
}

Outcome determinism() {
  HarnessOptions one;
  HarnessOptions four;
  four.workers = 4;
  const auto first = reports_to_json("all", 8, run_suite("all", 8, one)).dump();
  const auto second = reports_to_json("all", 8, run_suite("all", 8, one)).dump();
  const auto parallel = reports_to_json("all", 8, run_suite("all", 8, four)).dump();
  Outcome o;
  o.pass = first == second && first == parallel;
  o.note = o.pass ? "identical JSON across 2 runs and workers 1/4 (" + std::to_string(first.size()) + " bytes)"
                  : "JSON differs between runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) {
      extended = true;
    } else {
      std::cerr << "usage: acceptance [--extended]\n";
      return 2;
    }
  }

  struct Criterion {
    int id;
    const char* title;
    double limit;  // seconds; 0 means no limit
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden vectors", kGoldenLimitSeconds, golden},
      {2, "generating function over S_n (n<=8) and PT(n) (n<=7)", kGfLimitSeconds, gf},
      {3, "map and symmetry suites over S_8", 0, transfer_suites},
      {4, "structural suites", 0, structural},
      {5, "code b position sets and distributions", 0, baril},
      {6, "six-statistic symmetry", kSixStatLimitSeconds, [extended] { return six_stat(extended); }},
      {7, "determinism", 0, determinism},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double took = seconds_since(start);
    if (c.limit > 0 && took >= c.limit) {
      o.pass = false;
      o.note += "; over time limit " + fmt_seconds(c.limit);
    }
    all_ok = all_ok && o.pass;
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " - " << o.note
              << " [" << fmt_seconds(took) << "]\n";
  }
  return all_ok ? 0 : 1;
}
