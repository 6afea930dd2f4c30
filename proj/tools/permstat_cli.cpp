#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "permstat/blocks.hpp"
#include "permstat/distribution.hpp"
#include "permstat/harness.hpp"
#include "permstat/invseq.hpp"
#include "permstat/one_n.hpp"
#include "permstat/permutation.hpp"
#include "permstat/tableau.hpp"

using namespace permstat;

namespace {

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run_stat(const std::string& input, const std::string& names, bool sets, bool blocks) {
  const auto p = parse_permutation(input);
  const auto wanted = names.empty() ? statistic_names(Domain::permutations) : split_names(names);
  for (const auto& name : wanted) {
    const StatExpr stat(name, Domain::permutations);
    std::cout << name << "=" << stat(Object(p)) << "\n";
  }
  if (sets) {
    const auto r = stat_report(p);
    std::cout << "WNM=" << format_set(r.wnm_set) << "\n"
              << "RLM=" << format_set(r.rlm_set) << "\n"
              << "LRMAX=" << format_set(r.lrmax_set) << "\n"
              << "RLMAX=" << format_set(r.rlmax_set) << "\n"
              << "LRMIN=" << format_set(r.lrmin_set) << "\n"
              << "RLMIN=" << format_set(r.rlmin_set) << "\n"
              << "DES=" << format_set(r.des_set) << "\n"
              << "ASC=" << format_set(r.asc_set) << "\n";
  }
  if (blocks) std::cout << format_decomposition(decompose(p));
  return 0;
}

int run_map(const std::string& name, const std::string& input, bool trace, bool unchecked) {
  auto perm_out = [](const Permutation& p) { std::cout << format_permutation(p) << "\n"; };
  auto seq_out = [](const InversionSequence& s) { std::cout << format_inversion_sequence(s) << "\n"; };

  if (name == "gamma") {
    seq_out(gamma_insert(parse_inversion_sequence(input)));
  } else if (name == "b-inv") {
    perm_out(code_b_inv(parse_inversion_sequence(input)));
  } else if (name == "Phi" || name == "Gamma") {
    const auto t = parse_tableau(read_text(input));
    perm_out(name == "Phi" ? phi_zigzag(t) : gamma_cn(t));
  } else {
    const auto p = parse_permutation(input);
    if (name == "varphi") perm_out(varphi(p));
    else if (name == "chi321") perm_out(unchecked ? reverse_complement_core(p) : chi321(p));
    else if (name == "phi_swap") {
      if (p.size() == 1) {
        std::cerr << "warning: phi_swap is undefined for n = 1; returning the input\n";
        perm_out(p);
      } else {
        perm_out(phi_swap(p));
      }
    } else if (name == "rho") perm_out(rho(p));
    else if (name == "rho-inv") perm_out(rho_inv(p));
    else if (name == "alpha") {
      if (trace) {
        const auto t = alpha_trace(p);
        std::cout << format_permutation(t.input, "") << " -c-> " << format_permutation(t.complemented, "")
                  << " -i-> " << format_permutation(t.inverted, "") << " -b-> "
                  << format_inversion_sequence(t.coded) << " -gamma-> " << format_inversion_sequence(t.swapped)
                  << " -b^-1-> " << format_permutation(t.decoded, "") << " -i-> "
                  << format_permutation(t.reinverted, "") << " -c-> " << format_permutation(t.result, "") << "\n";
      } else {
        perm_out(alpha(p));
      }
    } else if (name == "beta") perm_out(beta(p));
    else if (name == "b") {
      if (trace) {
        for (const auto& slice : code_b_trace(p)) std::cout << format_slice(slice) << "\n";
      }
      seq_out(code_b(p));
    } else {
      throw InputError("unknown map '" + name + "'");
    }
  }
  return 0;
}

int run_tableau_enum(int n) {
  if (n < 1 || n > kMaxTableauN) throw InputError("n must lie in [1, " + std::to_string(kMaxTableauN) + "]");
  const auto all = all_tableaux(n);
  for (const auto& t : all) std::cout << compact_tableau(t) << "\n";
  std::cerr << all.size() << " tableaux of length " << n << "\n";
  return 0;
}

int run_dist(int n, const std::string& domain, const std::string& stats, const std::string& format,
             const std::string& out_path, unsigned jobs) {
  const auto d = parse_domain(domain);
  const auto names = split_names(stats);
  const auto table = joint_distribution(n, d, names, RunOptions{jobs});
  if (format == "json") write_text(out_path, table_to_json(table).dump(2) + "\n");
  else write_text(out_path, table_to_csv(table));
  return 0;
}

int run_verify(const std::string& suite, int max_n, bool json, unsigned jobs, bool extended, bool tables) {
  HarnessOptions opts;
  opts.workers = jobs;
  opts.extended = extended;
  opts.include_tables = tables;
  const auto reports = run_suite(suite, max_n, opts);
  const bool ok = all_pass(reports);
  if (json) {
    std::cout << reports_to_json(suite, max_n, reports).dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << to_text(r);
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.pass ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << ": " << reports.size() - failed << "/" << reports.size()
              << " checks passed\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation statistics toolkit"};
  app.require_subcommand(1);

  std::string perm_input, names;
  bool all_stats = false, sets = false, show_blocks = false;
  auto* stat = app.add_subcommand("stat", "Print statistics of a permutation");
  stat->add_option("perm", perm_input, "Permutation, e.g. \"5 9 3 7 2 1 6 8 4\"")->required();
  auto* all_flag = stat->add_flag("--all", all_stats, "Every registered statistic (default)");
  stat->add_option("--name", names, "Comma-separated statistic names")->excludes(all_flag);
  stat->add_flag("--sets", sets, "Also print extremum, descent and ascent sets");
  stat->add_flag("--blocks", show_blocks, "Also print the block decomposition");

  std::string map_name, map_input;
  bool trace = false, unchecked = false;
  auto* map = app.add_subcommand("map", "Apply a map");
  map->add_option("name", map_name, "varphi, chi321, phi_swap, rho, rho-inv, gamma, alpha, beta, b, b-inv, Phi, Gamma")
      ->required()
      ->check(CLI::IsMember({"varphi", "chi321", "phi_swap", "rho", "rho-inv", "gamma", "alpha", "beta", "b", "b-inv",
                             "Phi", "Gamma"}));
  map->add_option("input", map_input, "Permutation, inversion sequence, or tableau file for Phi/Gamma")->required();
  map->add_flag("--trace", trace, "alpha: print every stage; b: print every slice");
  map->add_flag("--unchecked", unchecked, "chi321: apply the construction without the 321 check");

  auto* tableau = app.add_subcommand("tableau", "Permutation tableaux");
  tableau->require_subcommand(1);
  int tableau_n = 0;
  auto* t_enum = tableau->add_subcommand("enum", "List every tableau of length n");
  t_enum->add_option("n", tableau_n)->required();
  std::string tableau_file, via = "phi";
  auto* t_alt = tableau->add_subcommand("alt", "Print the arrow form (U, L, .)");
  t_alt->add_option("file", tableau_file, "Tableau file or - for stdin")->required();
  auto* t_perm = tableau->add_subcommand("to-perm", "Convert a tableau to a permutation");
  t_perm->add_option("file", tableau_file, "Tableau file or - for stdin")->required();
  t_perm->add_option("--via", via, "phi (zigzag) or gamma (insertion)")->check(CLI::IsMember({"phi", "gamma"}));

  int dist_n = 0;
  std::string domain = "S", stats, format = "json", out_path;
  unsigned jobs = 1;
  auto* dist = app.add_subcommand("dist", "Joint distribution of statistics");
  dist->add_option("n", dist_n)->required();
  dist->add_option("--domain", domain, "S, S(321), I or PT");
  dist->add_option("--stats", stats, "Comma-separated statistic names, optional offset (rlmax-1)")->required();
  dist->add_option("--out", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  dist->add_option("-o,--output", out_path, "Write to a file instead of stdout");
  dist->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string suite;
  int max_n = 0;
  bool json = false, extended = false, tables = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", max_n, "Largest n")->required();
  verify->add_flag("--json", json, "Machine-readable report");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  verify->add_flag("--extended", extended, "Allow n = 9 on S_n");
  verify->add_flag("--tables", tables, "Attach distribution tables to JSON reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*stat) return run_stat(perm_input, names, sets, show_blocks);
    if (*map) return run_map(map_name, map_input, trace, unchecked);
    if (*t_enum) return run_tableau_enum(tableau_n);
    if (*t_alt) {
      std::cout << format_alt_tableau(to_alternative(parse_tableau(read_text(tableau_file))));
      return 0;
    }
    if (*t_perm) {
      const auto t = parse_tableau(read_text(tableau_file));
      std::cout << format_permutation(via == "phi" ? phi_zigzag(t) : gamma_cn(t)) << "\n";
      return 0;
    }
    if (*dist) return run_dist(dist_n, domain, stats, format, out_path, jobs);
    if (*verify) return run_verify(suite, max_n, json, jobs, extended, tables);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
