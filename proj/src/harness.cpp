#include "permstat/harness.hpp"

#include <algorithm>
#include <map>

#include "permstat/blocks.hpp"
#include "permstat/one_n.hpp"
#include "permstat/polynomial.hpp"

namespace permstat {

namespace {

const Permutation& perm(const Object& o) { return std::get<Permutation>(o); }
const InversionSequence& seq(const Object& o) { return std::get<InversionSequence>(o); }
const PermutationTableau& tab(const Object& o) { return std::get<PermutationTableau>(o); }

std::vector<int> object_key(const Object& o) {
  return std::visit(
      [](const auto& v) -> std::vector<int> {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Permutation>) return v.word();
        else if constexpr (std::is_same_v<V, InversionSequence>) return v.entries();
        else {
          std::vector<int> key{v.rows()};
          key.insert(key.end(), v.row_lengths().begin(), v.row_lengths().end());
          for (const auto& row : v.fill()) key.insert(key.end(), row.begin(), row.end());
          return key;
        }
      },
      o);
}

std::string format_key(const std::vector<int>& key) {
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) out += (i ? "," : "") + std::to_string(key[i]);
  return out + ")";
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

Report make_report(std::string suite, std::string check, int n) {
  Report r;
  r.suite = std::move(suite);
  r.check = std::move(check);
  r.n = n;
  return r;
}

using Failure = std::pair<std::size_t, std::string>;

/// Smallest index whose test fails. Each chunk stops at its own first
/// failure, so the answer does not depend on the worker count.
std::optional<Failure> first_failure(std::size_t count, unsigned workers,
                                     const std::function<std::optional<std::string>(std::size_t)>& test) {
  const unsigned chunks = std::max(1u, workers);
  std::vector<std::optional<Failure>> found(chunks);
  parallel_chunks(count, chunks, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (auto msg = test(i)) {
        found[chunk] = Failure{i, std::move(*msg)};
        return;
      }
    }
  });
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Map registry

struct MapSpec {
  std::string name;
  Domain domain;
  Domain codomain;
  int min_n = 1;
  std::function<bool(const Object&)> pre;
  std::function<bool(const Object&)> post;
  std::function<Object(const Object&)> apply;
};

const std::vector<MapSpec>& map_registry() {
  using D = Domain;
  auto on_perm = [](Permutation (*f)(const Permutation&)) {
    return [f](const Object& o) -> Object { return f(perm(o)); };
  };
  auto ends_n = [](const Object& o) { return perm(o).at(perm(o).size()) == perm(o).size(); };
  auto ends_1 = [](const Object& o) { return perm(o).at(perm(o).size()) == 1; };
  static const std::vector<MapSpec> registry = {
      {"varphi", D::permutations, D::permutations, 1, {}, {}, on_perm(&varphi)},
      {"chi321", D::avoiding_321, D::avoiding_321, 1, {}, {}, on_perm(&chi321)},
      {"phi_swap", D::permutations, D::permutations, 2, {}, {}, on_perm(&phi_swap)},
      {"rho", D::permutations, D::permutations, 2, ends_n, ends_1, on_perm(&rho)},
      {"rho_inv", D::permutations, D::permutations, 2, ends_1, ends_n, on_perm(&rho_inv)},
      {"alpha", D::permutations, D::permutations, 1, {}, {}, on_perm(&alpha)},
      {"beta", D::permutations, D::permutations, 1, {}, {}, on_perm(&beta)},
      {"gamma_insert", D::inversion_sequences, D::inversion_sequences, 1, {}, {},
       [](const Object& o) -> Object { return gamma_insert(seq(o)); }},
      {"code_b", D::permutations, D::inversion_sequences, 1, {}, {},
       [](const Object& o) -> Object { return code_b(perm(o)); }},
      {"code_b_inv", D::inversion_sequences, D::permutations, 1, {}, {},
       [](const Object& o) -> Object { return code_b_inv(seq(o)); }},
      {"phi_zigzag", D::tableaux, D::permutations, 1, {}, {},
       [](const Object& o) -> Object { return phi_zigzag(tab(o)); }},
      {"gamma_cn", D::tableaux, D::permutations, 1, {}, {},
       [](const Object& o) -> Object { return gamma_cn(tab(o)); }},
  };
  return registry;
}

const MapSpec& find_map(std::string_view name) {
  for (const auto& m : map_registry())
    if (m.name == name) return m;
  throw InputError("unknown map '" + std::string(name) + "'");
}

std::vector<Object> filtered(int n, Domain d, const std::function<bool(const Object&)>& keep) {
  auto all = enumerate_domain(n, d);
  if (!keep) return all;
  std::vector<Object> out;
  for (auto& o : all)
    if (keep(o)) out.push_back(std::move(o));
  return out;
}

int s_cap(const HarnessOptions& opts) { return opts.extended ? kSuiteMaxSExtended : kSuiteMaxS; }

BivariatePolynomial polynomial_from(const DistributionTable& t) {
  BivariatePolynomial p;
  for (const auto& [key, count] : t.counts) p.add_term(key[0], key[1], BigInt(count));
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------

nlohmann::json to_json(const Report& r) {
  nlohmann::json j = {{"suite", r.suite}, {"check", r.check}, {"n", r.n}, {"status", r.pass ? "PASS" : "FAIL"}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (r.table) j["table"] = *r.table;
  return j;
}

std::string to_text(const Report& r) {
  std::string out = std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.suite + "/" + r.check + " n=" + std::to_string(r.n);
  if (!r.detail.empty()) out += "  " + r.detail;
  out += "\n";
  if (!r.witness.empty()) out += "    witness: " + r.witness + "\n";
  return out;
}

Report check_property(std::string suite, std::string check, int n, Domain domain,
                      const std::function<std::optional<std::string>(const Object&)>& predicate,
                      const HarnessOptions& opts) {
  Report r = make_report(std::move(suite), std::move(check), n);
  const auto objects = enumerate_domain(n, domain);
  const auto failure =
      first_failure(objects.size(), opts.workers, [&](std::size_t i) { return predicate(objects[i]); });
  r.pass = !failure;
  if (failure) {
    r.witness = format_object(objects[failure->first]) + ": " + failure->second;
  } else {
    r.detail = std::to_string(objects.size()) + " objects of " + std::string(domain_name(domain));
  }
  return r;
}

Report check_equidistribution(int n, Domain domain_a, const std::vector<std::string>& stats_a, Domain domain_b,
                              const std::vector<std::string>& stats_b, const HarnessOptions& opts) {
  if (stats_a.size() != stats_b.size()) throw InputError("statistic tuples differ in arity");
  Report r = make_report("equidist", join(stats_a, ",") + " ~ " + join(stats_b, ","), n);
  const RunOptions run{opts.workers};
  const auto a = joint_distribution(n, domain_a, stats_a, run);
  const auto b = joint_distribution(n, domain_b, stats_b, run);
  r.pass = a.counts == b.counts;
  if (r.pass) {
    r.detail = std::to_string(a.counts.size()) + " keys over " + std::to_string(a.total()) + " objects";
  } else {
    std::map<std::vector<int>, std::pair<std::uint64_t, std::uint64_t>> both;
    for (const auto& [k, c] : a.counts) both[k].first = c;
    for (const auto& [k, c] : b.counts) both[k].second = c;
    for (const auto& [k, c] : both) {
      if (c.first != c.second) {
        r.witness = "key " + format_key(k) + ": " + std::to_string(c.first) + " vs " + std::to_string(c.second);
        break;
      }
    }
  }
  if (opts.include_tables) r.table = nlohmann::json{{"a", table_to_json(a)}, {"b", table_to_json(b)}};
  return r;
}

Report check_equidistribution(int n, Domain domain, const std::vector<std::string>& stats_a,
                              const std::vector<std::string>& stats_b, const HarnessOptions& opts) {
  return check_equidistribution(n, domain, stats_a, domain, stats_b, opts);
}

std::vector<std::string> map_names() {
  std::vector<std::string> out;
  for (const auto& m : map_registry()) out.push_back(m.name);
  return out;
}

Report check_map(int n, std::string_view map_name, MapMode mode, const StatPairs& transfers,
                 const HarnessOptions& opts) {
  const MapSpec& spec = find_map(map_name);
  if (n < spec.min_n) {
    throw InputError("map " + spec.name + " needs n >= " + std::to_string(spec.min_n));
  }
  if (mode == MapMode::involution && spec.domain != spec.codomain) {
    throw InputError("map " + spec.name + " changes domain and cannot be an involution");
  }

  std::vector<std::string> pair_text;
  std::vector<std::pair<StatExpr, StatExpr>> exprs;
  for (const auto& [a, b] : transfers) {
    exprs.emplace_back(StatExpr(a, spec.domain), StatExpr(b, spec.codomain));
    pair_text.push_back(a + "->" + b);
  }
  Report r = make_report("maps", spec.name + (mode == MapMode::involution ? " involution" : " bijection"), n);

  const auto objects = filtered(n, spec.domain, spec.pre);
  std::vector<std::vector<int>> image_keys(objects.size());

  const auto failure = first_failure(objects.size(), opts.workers, [&](std::size_t i) -> std::optional<std::string> {
    const Object& x = objects[i];
    std::optional<Object> image;
    try {
      image = spec.apply(x);
    } catch (const std::exception& e) {
      return std::string("map raised: ") + e.what();
    }
    const Object& y = *image;
    const std::string arrow = " -> " + format_object(y);
    if (spec.codomain == Domain::avoiding_321 && !avoids_321(perm(y))) return arrow + " contains 321";
    if (spec.post && !spec.post(y)) return arrow + " lies outside the codomain";
    if (mode == MapMode::involution) {
      std::optional<Object> back;
      try {
        back = spec.apply(y);
      } catch (const std::exception& e) {
        return arrow + ", second application raised: " + e.what();
      }
      if (*back != x) return arrow + " -> " + format_object(*back) + " is not the input";
    }
    for (std::size_t k = 0; k < exprs.size(); ++k) {
      const int a = exprs[k].first(x);
      const int b = exprs[k].second(y);
      if (a != b) {
        return arrow + ": " + exprs[k].first.text() + "=" + std::to_string(a) + " but " + exprs[k].second.text() +
               " of image=" + std::to_string(b);
      }
    }
    image_keys[i] = object_key(y);
    return std::nullopt;
  });

  if (failure) {
    r.witness = format_object(objects[failure->first]) + failure->second;
    return r;
  }

  std::vector<std::size_t> order(objects.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t rr) {
    return image_keys[l] != image_keys[rr] ? image_keys[l] < image_keys[rr] : l < rr;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (image_keys[order[i]] == image_keys[order[i - 1]]) {
      r.witness = format_object(objects[order[i - 1]]) + " and " + format_object(objects[order[i]]) +
                  " share the image " + format_object(spec.apply(objects[order[i]]));
      return r;
    }
  }
  const auto codomain_size = filtered(n, spec.codomain, spec.post).size();
  if (codomain_size != objects.size()) {
    r.witness = "image has " + std::to_string(objects.size()) + " elements, codomain " + std::to_string(codomain_size);
    return r;
  }

  r.pass = true;
  r.detail = std::to_string(objects.size()) + " inputs";
  if (!pair_text.empty()) r.detail += "; transfers " + join(pair_text, ", ");
  return r;
}

Report check_gf(int n, const HarnessOptions& opts) {
  if (n < 1 || n > s_cap(opts)) throw InputError("generating-function check needs 1 <= n <= " + std::to_string(s_cap(opts)));
  Report r = make_report("gf", "rising-factorial", n);
  const auto expected = rising_factorial(n);
  const RunOptions run{opts.workers};

  const auto s_side = polynomial_from(joint_distribution(n, Domain::permutations, {"wnm-1", "rlm"}, run));
  if (!(s_side == expected)) {
    r.witness = "S side " + s_side.to_string() + " != " + expected.to_string();
    return r;
  }
  r.detail = expected.to_string();
  if (n <= kSuiteMaxPT) {
    const auto pt_side = polynomial_from(joint_distribution(n, Domain::tableaux, {"urr-1", "topone"}, run));
    if (!(pt_side == expected)) {
      r.witness = "PT side " + pt_side.to_string() + " != " + expected.to_string();
      return r;
    }
    r.detail += " (S and PT)";
  } else {
    r.detail += " (S only)";
  }
  r.pass = true;
  return r;
}

Report check_conjecture21(int n, const HarnessOptions& opts) {
  if (n < 1 || n > kSuiteMaxSExtended) throw InputError("six-statistic check needs 1 <= n <= 9");
  Report r = check_equidistribution(n, Domain::permutations, {"rlm", "rlmin", "lrmax", "des", "ides", "u321"},
                                    {"rlm", "lrmax", "rlmin", "des", "ides", "u321"}, opts);
  r.suite = "conjecture";
  r.check = "six-statistic-symmetry";
  return r;
}

Report check_tableaux(int n, const HarnessOptions& opts) {
  if (n < 1 || n > kSuiteMaxPT) throw InputError("tableau check needs 1 <= n <= " + std::to_string(kSuiteMaxPT));
  Report r = make_report("tableaux", "row-statistics", n);
  const auto phi = check_map(n, "phi_zigzag", MapMode::bijection, {{"urr", "wnm"}}, opts);
  const auto gam = check_map(n, "gamma_cn", MapMode::bijection, {{"urr", "rlmin"}, {"topone", "rlm"}}, opts);
  for (const auto* part : {&phi, &gam}) {
    if (!part->pass) {
      r.witness = part->check + ": " + part->witness;
      return r;
    }
  }
  r.pass = true;
  r.detail = phi.detail + "; zigzag urr->wnm; insertion urr->rlmin, topone->rlm";
  return r;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

using Sink = std::vector<Report>;
using SuiteBody = void (*)(int n, const HarnessOptions& opts, Sink& out);

void emit(Sink& out, Report r, std::string_view suite, std::string_view check) {
  r.suite = suite;
  r.check = check;
  out.push_back(std::move(r));
}

std::optional<std::string> mismatch(const std::string& what, const std::set<int>& a, const std::set<int>& b) {
  if (a == b) return std::nullopt;
  return what + ": " + format_set(a) + " vs " + format_set(b);
}

void suite_gf(int n, const HarnessOptions& opts, Sink& out) { emit(out, check_gf(n, opts), "gf", "rising-factorial"); }

void suite_thm11(int n, const HarnessOptions& opts, Sink& out) {
  emit(out,
       check_equidistribution(n, Domain::avoiding_321, {"rlm", "rlmin", "wnm", "des", "ides"},
                              {"rlm", "wnm", "rlmin", "des", "ides"}, opts),
       "thm11", "avoider-five-stat-symmetry");
  emit(out,
       check_map(n, "chi321", MapMode::involution,
                 {{"rlm", "rlm"}, {"rlmin", "wnm"}, {"wnm", "rlmin"}, {"des", "des"}, {"ides", "ides"}}, opts),
       "thm11", "chi321-involution");
}

void suite_thm12(int n, const HarnessOptions& opts, Sink& out) {
  out.push_back(check_property("thm12", "wnm-equals-lrmax", n, Domain::permutations, [](const Object& o) {
    const auto& p = perm(o);
    return mismatch("WNM vs LRMAX", wnm_set(p), boundary_extrema(p.values(), Extremum::lrmax));
  }, opts));
  out.push_back(check_property("thm12", "avoider-extrema-cover", n, Domain::permutations,
                               [](const Object& o) -> std::optional<std::string> {
    const auto& p = perm(o);
    const auto maxima = boundary_extrema(p.values(), Extremum::lrmax);
    const auto minima = boundary_extrema(p.values(), Extremum::rlmin);
    bool covered = true;
    for (int v : p) covered = covered && (maxima.contains(v) || minima.contains(v));
    if (covered == avoids_321(p)) return std::nullopt;
    return std::string(covered ? "every letter is an extremum but 321 occurs"
                               : "321-avoiding but some letter is neither extremum");
  }, opts));
  out.push_back(check_property("thm12", "avoider-rlm-first-letter", n, Domain::permutations,
                               [](const Object& o) -> std::optional<std::string> {
    const auto& p = perm(o);
    if (!avoids_321(p)) return std::nullopt;
    const int expected = p.at(1) == 1 ? 0 : 1;
    if (rlm(p) == expected) return std::nullopt;
    return "rlm=" + std::to_string(rlm(p)) + ", expected " + std::to_string(expected);
  }, opts));
  emit(out,
       check_equidistribution(n, Domain::permutations, {"rlm", "rlmin", "wnm", "des", "u321"},
                              {"rlm", "wnm", "rlmin", "des", "u321"}, opts),
       "thm12", "five-stat-symmetry");
  emit(out,
       check_map(n, "varphi", MapMode::involution,
                 {{"rlmin", "wnm"}, {"wnm", "rlmin"}, {"rlm", "rlm"}, {"des", "des"}, {"u321", "u321"}}, opts),
       "thm12", "varphi-involution");

  // Consecutive-triple reading of the 321 pattern against the looser reading
  // with only the first two letters adjacent.
  Report r = make_report("thm12", "consecutive-321-reading", n);
  const VincularPattern loose(Permutation({3, 2, 1}), {1});
  int loose_breaks = 0;
  std::optional<std::string> strict_break;
  for_each_permutation(n, [&](const Permutation& p) {
    const auto q = varphi(p);
    const int strict_p = count_vincular(p, pattern_321_consecutive());
    if (!strict_break && (strict_p != count_vincular(q, pattern_321_consecutive()) || strict_p != u321(p))) {
      strict_break = format_permutation(p) + " -> " + format_permutation(q);
    }
    if (count_vincular(p, loose) != count_vincular(q, loose)) ++loose_breaks;
  });
  r.pass = !strict_break;
  if (strict_break) r.witness = *strict_break;
  r.detail = "adjacency {1,2} preserved by varphi; adjacency {1} broken on " + std::to_string(loose_breaks) +
             " of " + std::to_string(factorial(n));
  out.push_back(std::move(r));
}

void suite_thm13(int n, const HarnessOptions& opts, Sink& out) {
  emit(out, check_equidistribution(n, Domain::permutations, {"rlm", "wnm-1"}, {"wnm-1", "rlm"}, opts), "thm13",
       "rlm-wnm-symmetry");
  if (n < 2) return;
  const StatPairs swap = {{"rlm", "lrmax-1"}, {"lrmax-1", "rlm"}};
  emit(out, check_map(n, "phi_swap", MapMode::involution, swap, opts), "thm13", "phi_swap-involution");
  emit(out, check_map(n, "rho", MapMode::bijection, swap, opts), "thm13", "rho-bijection");
  emit(out, check_map(n, "rho_inv", MapMode::bijection, swap, opts), "thm13", "rho_inv-bijection");
  out.push_back(check_property("thm13", "rho-round-trip", n, Domain::permutations,
                               [](const Object& o) -> std::optional<std::string> {
    const auto& p = perm(o);
    const int last = p.at(p.size());
    if (last == p.size() && rho_inv(rho(p)) != p) return std::string("rho_inv(rho(p)) != p");
    if (last == 1 && rho(rho_inv(p)) != p) return std::string("rho(rho_inv(t)) != t");
    return std::nullopt;
  }, opts));
}

void suite_thm14(int n, const HarnessOptions& opts, Sink& out) {
  emit(out,
       check_map(n, "alpha", MapMode::involution,
                 {{"asc", "asc"}, {"rlmax", "rlmax"}, {"lrmax", "rlmin"}, {"rlmin", "lrmax"}}, opts),
       "thm14", "alpha-involution");
  emit(out,
       check_map(n, "beta", MapMode::bijection, {{"rlm", "rlmax-1"}, {"wnm", "rlmin"}, {"asc", "asc"}}, opts),
       "thm14", "beta-bijection");
  emit(out,
       check_equidistribution(n, Domain::permutations, {"rlm", "wnm", "asc"}, {"rlmax-1", "rlmin", "asc"}, opts),
       "thm14", "rlm-wnm-asc");
  emit(out,
       check_equidistribution(n, Domain::permutations, {"rlm", "rlmin", "asc"}, {"rlmax-1", "rlmin", "asc"}, opts),
       "thm14", "rlm-rlmin-asc");
}

std::optional<std::string> rotation_laws(std::span<const int> w) {
  const Word word(w.begin(), w.end());
  const int hi = *std::max_element(word.begin(), word.end());
  const int lo = *std::min_element(word.begin(), word.end());
  const Word l = rotate_min(word);
  const Word r = rotate_max(word);
  if ((rotate_max(l) == word) != (word.front() == hi)) return "R(L(w)) law fails on " + format_word(word);
  if ((rotate_min(r) == word) != (word.back() == lo)) return "L(R(w)) law fails on " + format_word(word);
  if (word.front() == hi && count_consecutive_321(word) != count_consecutive_321(l))
    return "L changes consecutive 321 count on " + format_word(word);
  if (word.back() == lo && count_consecutive_321(word) != count_consecutive_321(r))
    return "R changes consecutive 321 count on " + format_word(word);
  return std::nullopt;
}

void suite_blocks(int n, const HarnessOptions& opts, Sink& out) {
  const auto D = Domain::permutations;
  out.push_back(check_property("blocks", "cover-and-t-block", n, D, [](const Object& o) -> std::optional<std::string> {
    const auto& p = perm(o);
    const auto d = decompose(p);
    if (d.concatenated() != p.word()) return std::string("blocks do not concatenate to p");
    for (const auto& b : d.blocks)
      if (b.letters.empty()) return std::string("empty block");
    if (d.count(BlockClass::T) < 1) return std::string("no T block");
    return std::nullopt;
  }, opts));
  out.push_back(check_property("blocks", "n-block-neighbours", n, D, [](const Object& o) -> std::optional<std::string> {
    const auto d = decompose(perm(o));
    const auto& b = d.blocks;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i].kind != BlockClass::N) continue;
      std::size_t j = i;
      while (j > 0 && b[j - 1].kind == BlockClass::I) --j;
      if (j == 0 || b[j - 1].kind != BlockClass::T) return "N block " + std::to_string(i + 1) + " lacks T/I* on the left";
      std::size_t h = i + 1;
      while (h < b.size() && b[h].kind == BlockClass::A) ++h;
      if (h == b.size() || b[h].kind != BlockClass::T) return "N block " + std::to_string(i + 1) + " lacks A*/T on the right";
    }
    return std::nullopt;
  }, opts));
  out.push_back(check_property("blocks", "extreme-letters-increase", n, D,
                               [](const Object& o) -> std::optional<std::string> {
    const auto d = decompose(perm(o));
    int last_max = 0;
    int last_min = 0;
    for (const auto& b : d.blocks) {
      if (b.kind == BlockClass::T || b.kind == BlockClass::A) {
        if (b.max() <= last_max) return std::string("T/A maxima not increasing");
        last_max = b.max();
      }
      if (b.kind == BlockClass::T || b.kind == BlockClass::I) {
        if (b.min() <= last_min) return std::string("T/I minima not increasing");
        last_min = b.min();
      }
    }
    return std::nullopt;
  }, opts));
  out.push_back(check_property("blocks", "rotation-laws", n, D, [](const Object& o) -> std::optional<std::string> {
    const auto& p = perm(o);
    if (auto bad = rotation_laws(p.values())) return bad;
    for (const auto& b : decompose(p).blocks)
      if (auto bad = rotation_laws(b.letters)) return bad;
    return std::nullopt;
  }, opts));
  out.push_back(check_property("blocks", "varphi-block-classes", n, D, [](const Object& o) -> std::optional<std::string> {
    const auto& p = perm(o);
    std::vector<Block> expected;
    for (const auto& b : decompose(p).blocks) {
      switch (b.kind) {
        case BlockClass::I: expected.push_back({rotate_max(b.letters), BlockClass::A}); break;
        case BlockClass::A: expected.push_back({rotate_min(b.letters), BlockClass::I}); break;
        default: expected.push_back(b);
      }
    }
    auto actual = decompose(varphi(p)).blocks;
    auto less = [](const Block& a, const Block& b) {
      return a.letters != b.letters ? a.letters < b.letters : a.kind < b.kind;
    };
    std::sort(expected.begin(), expected.end(), less);
    std::sort(actual.begin(), actual.end(), less);
    if (expected != actual) return "blocks of varphi(p) = " + format_permutation(varphi(p)) + " differ";
    return std::nullopt;
  }, opts));
  out.push_back(check_property("blocks", "descents-inside-blocks", n, D, [](const Object& o) -> std::optional<std::string> {
    const auto& p = perm(o);
    std::vector<int> block_of;
    int index = 0;
    for (const auto& b : decompose(p).blocks) {
      block_of.insert(block_of.end(), b.letters.size(), index);
      ++index;
    }
    for (int i : descent_set(p.values()))
      if (block_of[i - 1] != block_of[i]) return "descent at " + std::to_string(i) + " crosses a bar";
    return std::nullopt;
  }, opts));
}

void suite_gamma(int n, const HarnessOptions& opts, Sink& out) {
  if (n > kSuiteMaxI) return;
  emit(out,
       check_map(n, "gamma_insert", MapMode::involution,
                 {{"dist", "dist"}, {"zero", "zero"}, {"maxStat", "rlminStrict"}, {"rlminStrict", "maxStat"}}, opts),
       "gamma", "gamma-involution");
  out.push_back(check_property("gamma", "last-entry-top-max", n, Domain::inversion_sequences,
                               [](const Object& o) -> std::optional<std::string> {
    const auto& s = seq(o);
    const auto top = *invseq_stats(gamma_insert(s)).max_set.rbegin();
    if (top == s.at(s.size()) + 1) return std::nullopt;
    return "largest MAX position of the image is " + std::to_string(top);
  }, opts));
  out.push_back(check_property("gamma", "delete-top-max", n, Domain::inversion_sequences,
                               [](const Object& o) -> std::optional<std::string> {
    const auto& s = seq(o);
    const int j = *invseq_stats(s).max_set.rbegin();
    std::vector<int> rest = s.entries();
    rest.erase(rest.begin() + (j - 1));
    std::vector<int> expected = rest.empty() ? std::vector<int>{} : gamma_insert(InversionSequence(rest)).entries();
    expected.push_back(s.at(j));
    if (gamma_insert(s).entries() == expected) return std::nullopt;
    return "gamma(s) != gamma(s without position " + std::to_string(j) + ") followed by s_j";
  }, opts));
}

void suite_baril(int n, const HarnessOptions& opts, Sink& out) {
  if (n > kSuiteMaxI) return;
  emit(out, check_map(n, "code_b", MapMode::bijection, {}, opts), "baril", "code_b-bijection");
  out.push_back(check_property("baril", "position-sets", n, Domain::permutations, [](const Object& o) {
    const auto& p = perm(o);
    const auto st = invseq_stats(code_b(p));
    if (auto bad = mismatch("DES vs ASC", descent_set(p.values()), st.asc_set)) return bad;
    if (auto bad = mismatch("LRMAX vs ZERO", extrema_positions(p.values(), Extremum::lrmax), st.zero_set)) return bad;
    if (auto bad = mismatch("LRMIN vs MAX", extrema_positions(p.values(), Extremum::lrmin), st.max_set)) return bad;
    return mismatch("RLMAX vs RLMIN", extrema_positions(p.values(), Extremum::rlmax), st.rlmin_strict_set);
  }, opts));
  emit(out,
       check_equidistribution(n, Domain::permutations, {"des", "ides"}, Domain::inversion_sequences, {"asc", "dist"},
                              opts),
       "baril", "des-ides-vs-asc-dist");
  out.push_back(check_property("baril", "slice-invariants", n, Domain::permutations,
                               [](const Object& o) -> std::optional<std::string> {
    const auto trace = code_b_trace(perm(o));
    for (std::size_t i = 0; i < trace.size(); ++i)
      if (!slice_well_formed(trace[i], static_cast<int>(i))) return "U_" + std::to_string(i) + " = " + format_slice(trace[i]);
    return std::nullopt;
  }, opts));
  out.push_back(check_property("baril", "inverse-round-trip", n, Domain::inversion_sequences,
                               [](const Object& o) -> std::optional<std::string> {
    const auto& s = seq(o);
    const auto p = code_b_inv(s);
    if (code_b(p) == s) return std::nullopt;
    return "b(b^-1(s)) = " + format_inversion_sequence(code_b(p));
  }, opts));

  if (n != 5) return;
  // Set-level IDES = DIST does not hold; 24135 is the pinned witness.
  Report r = make_report("baril", "ides-dist-set-discrepancy", n);
  int differing = 0;
  std::string pinned;
  for_each_permutation(n, [&](const Permutation& p) {
    const auto ides_set = descent_set(inverse(p).values());
    const auto dist_set = invseq_stats(code_b(p)).dist_set;
    if (ides_set == dist_set) return;
    ++differing;
    if (format_permutation(p, "") == "24135") {
      pinned = "24135: IDES=" + format_set(ides_set) + " DIST(b)=" + format_set(dist_set);
    }
  });
  r.pass = !pinned.empty();
  r.detail = "set-level equality fails on " + std::to_string(differing) + " of 120";
  if (r.pass) r.detail += "; " + pinned;
  else r.witness = "24135 does not exhibit the discrepancy";
  out.push_back(std::move(r));
}

void suite_tableaux(int n, const HarnessOptions& opts, Sink& out) {
  if (n > kSuiteMaxPT) return;
  Report count = make_report("tableaux", "count", n);
  const auto size = all_tableaux(n).size();
  count.pass = static_cast<long long>(size) == factorial(n);
  (count.pass ? count.detail : count.witness) = std::to_string(size) + " tableaux, n! = " + std::to_string(factorial(n));
  out.push_back(std::move(count));
  out.push_back(check_tableaux(n, opts));
  out.push_back(check_property("tableaux", "alternative-round-trip", n, Domain::tableaux,
                               [](const Object& o) -> std::optional<std::string> {
    const auto& t = tab(o);
    if (from_alternative(to_alternative(t)) == t) return std::nullopt;
    return std::string("fill not recovered from arrows");
  }, opts));
}

void suite_conjecture(int n, const HarnessOptions& opts, Sink& out) { out.push_back(check_conjecture21(n, opts)); }

const std::vector<std::pair<std::string, SuiteBody>>& suites() {
  static const std::vector<std::pair<std::string, SuiteBody>> table = {
      {"gf", suite_gf},       {"thm11", suite_thm11},       {"thm12", suite_thm12},
      {"thm13", suite_thm13}, {"thm14", suite_thm14},       {"blocks", suite_blocks},
      {"gamma", suite_gamma}, {"baril", suite_baril},       {"tableaux", suite_tableaux},
      {"conjecture", suite_conjecture},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out{"all"};
  for (const auto& [name, body] : suites()) out.push_back(name);
  return out;
}

std::vector<Report> run_suite(std::string_view suite, int max_n, const HarnessOptions& opts) {
  if (max_n < 1 || max_n > s_cap(opts)) {
    throw InputError("--max-n must lie in [1, " + std::to_string(s_cap(opts)) + "]" +
                     (opts.extended ? "" : "; use --extended for 9"));
  }
  std::vector<Report> out;
  bool found = false;
  for (const auto& [name, body] : suites()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    for (int n = 1; n <= max_n; ++n) body(n, opts, out);
  }
  if (!found) throw InputError("unknown suite '" + std::string(suite) + "'");
  return out;
}

bool all_pass(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
}

nlohmann::json reports_to_json(std::string_view suite, int max_n, const std::vector<Report>& reports) {
  nlohmann::json list = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    if (r.pass) ++passed;
  }
  return {{"suite", suite},
          {"max_n", max_n},
          {"status", passed == reports.size() ? "PASS" : "FAIL"},
          {"passed", passed},
          {"failed", reports.size() - passed},
          {"reports", list}};
}

}  // namespace permstat
