#include "permstat/distribution.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

namespace permstat {

namespace {

enum class Kind { permutation, inversion_sequence, tableau };

Kind kind_of(Domain d) {
  switch (d) {
    case Domain::permutations:
    case Domain::avoiding_321: return Kind::permutation;
    case Domain::inversion_sequences: return Kind::inversion_sequence;
    case Domain::tableaux: return Kind::tableau;
  }
  return Kind::permutation;
}

struct CatalogueEntry {
  std::string name;
  Kind kind;
  std::function<int(const Object&)> eval;
};

template <typename T, typename F>
std::function<int(const Object&)> on(F f) {
  return [f](const Object& o) { return f(std::get<T>(o)); };
}

const std::vector<CatalogueEntry>& catalogue() {
  using P = Permutation;
  using S = InversionSequence;
  using T = PermutationTableau;
  static const std::vector<CatalogueEntry> entries = {
      {"rlm", Kind::permutation, on<P>([](const P& p) { return rlm(p); })},
      {"wnm", Kind::permutation, on<P>([](const P& p) { return wnm(p); })},
      {"rlmin", Kind::permutation, on<P>([](const P& p) { return rlmin(p.values()); })},
      {"rlmax", Kind::permutation, on<P>([](const P& p) { return rlmax(p.values()); })},
      {"lrmax", Kind::permutation, on<P>([](const P& p) { return lrmax(p.values()); })},
      {"lrmin", Kind::permutation, on<P>([](const P& p) { return lrmin(p.values()); })},
      {"des", Kind::permutation, on<P>([](const P& p) { return des(p.values()); })},
      {"asc", Kind::permutation, on<P>([](const P& p) { return asc(p.values()); })},
      {"ides", Kind::permutation, on<P>([](const P& p) { return ides(p); })},
      {"u321", Kind::permutation, on<P>([](const P& p) { return u321(p); })},
      {"u312", Kind::permutation, on<P>([](const P& p) { return u312(p); })},
      {"zero", Kind::inversion_sequence, on<S>([](const S& s) { return invseq_stats(s).zero; })},
      {"maxStat", Kind::inversion_sequence, on<S>([](const S& s) { return invseq_stats(s).max_stat; })},
      {"dist", Kind::inversion_sequence, on<S>([](const S& s) { return invseq_stats(s).dist; })},
      {"rlminStrict", Kind::inversion_sequence, on<S>([](const S& s) { return invseq_stats(s).rlmin_strict; })},
      {"asc", Kind::inversion_sequence, on<S>([](const S& s) { return invseq_stats(s).asc; })},
      {"urr", Kind::tableau, on<T>([](const T& t) { return tableau_stats(t).urr; })},
      {"topone", Kind::tableau, on<T>([](const T& t) { return tableau_stats(t).topone; })},
  };
  return entries;
}

}  // namespace

std::string_view domain_name(Domain d) {
  switch (d) {
    case Domain::permutations: return "S";
    case Domain::avoiding_321: return "S(321)";
    case Domain::inversion_sequences: return "I";
    case Domain::tableaux: return "PT";
  }
  return "?";
}

Domain parse_domain(std::string_view text) {
  if (text == "S") return Domain::permutations;
  if (text == "S(321)" || text == "S321") return Domain::avoiding_321;
  if (text == "I") return Domain::inversion_sequences;
  if (text == "PT") return Domain::tableaux;
  throw InputError("unknown domain '" + std::string(text) + "' (expected S, S(321), I or PT)");
}

int domain_max_n(Domain d) {
  switch (d) {
    case Domain::permutations: return 10;
    case Domain::avoiding_321: return 12;
    case Domain::inversion_sequences: return 9;
    case Domain::tableaux: return kMaxTableauN;
  }
  return 0;
}

std::vector<Object> enumerate_domain(int n, Domain d) {
  if (n < 1 || n > domain_max_n(d)) {
    throw InputError("n = " + std::to_string(n) + " outside [1, " + std::to_string(domain_max_n(d)) +
                     "] for domain " + std::string(domain_name(d)));
  }
  std::vector<Object> out;
  switch (d) {
    case Domain::permutations:
      out.reserve(static_cast<std::size_t>(factorial(n)));
      for_each_permutation(n, [&](const Permutation& p) { out.emplace_back(p); });
      break;
    case Domain::avoiding_321:
      for_each_permutation(n, [&](const Permutation& p) {
        if (avoids_321(p)) out.emplace_back(p);
      });
      break;
    case Domain::inversion_sequences:
      for (auto& s : all_inversion_sequences(n)) out.emplace_back(std::move(s));
      break;
    case Domain::tableaux:
      for (auto& t : all_tableaux(n)) out.emplace_back(std::move(t));
      break;
  }
  return out;
}

std::string format_object(const Object& o) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Permutation>) return format_permutation(v);
        else if constexpr (std::is_same_v<V, InversionSequence>) return format_inversion_sequence(v);
        else return compact_tableau(v);
      },
      o);
}

// ---------------------------------------------------------------------------

StatExpr::StatExpr(std::string_view text, Domain d) : text_(text) {
  const auto sign = text.find_first_of("+-");
  const std::string name(text.substr(0, sign));
  if (sign != std::string_view::npos) {
    const auto digits = text.substr(sign + 1);
    if (digits.empty() || digits.size() > 4 || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InputError("bad statistic offset in '" + std::string(text) + "'");
    }
    offset_ = std::stoi(std::string(digits)) * (text[sign] == '-' ? -1 : 1);
  }
  const Kind kind = kind_of(d);
  bool known_elsewhere = false;
  for (const auto& e : catalogue()) {
    if (e.name != name) continue;
    if (e.kind == kind) {
      eval_ = e.eval;
      return;
    }
    known_elsewhere = true;
  }
  if (known_elsewhere) {
    throw InputError("statistic '" + name + "' is not defined on domain " + std::string(domain_name(d)));
  }
  throw InputError("unknown statistic '" + name + "'");
}

std::vector<std::string> statistic_names(Domain d) {
  std::vector<std::string> out;
  for (const auto& e : catalogue())
    if (e.kind == kind_of(d)) out.push_back(e.name);
  return out;
}

std::uint64_t DistributionTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, count] : counts) sum += count;
  return sum;
}

void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (chunks == 1) {
    body(0, 0, count);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    threads.emplace_back([&, c, begin, end] {
      try {
        body(c, begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

DistributionTable joint_distribution(int n, Domain d, const std::vector<std::string>& stats, const RunOptions& opts) {
  if (stats.empty()) throw InputError("no statistics requested");
  std::vector<StatExpr> exprs;
  for (const auto& s : stats) exprs.emplace_back(s, d);
  const auto objects = enumerate_domain(n, d);

  const unsigned workers = std::max(1u, opts.workers);
  std::vector<std::map<std::vector<int>, std::uint64_t>> partial(workers);
  parallel_chunks(objects.size(), workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    auto& local = partial[chunk];
    std::vector<int> key(exprs.size());
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t k = 0; k < exprs.size(); ++k) key[k] = exprs[k](objects[i]);
      ++local[key];
    }
  });

  DistributionTable table{n, d, stats, {}};
  for (const auto& local : partial)
    for (const auto& [key, count] : local) table.counts[key] += count;
  return table;
}

// ---------------------------------------------------------------------------

nlohmann::json table_to_json(const DistributionTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, count] : t.counts) rows.push_back({{"key", key}, {"count", count}});
  return {{"n", t.n}, {"domain", domain_name(t.domain)}, {"stats", t.stat_names}, {"total", t.total()}, {"rows", rows}};
}

DistributionTable table_from_json(const nlohmann::json& j) {
  try {
    DistributionTable t;
    t.n = j.at("n").get<int>();
    t.domain = parse_domain(j.at("domain").get<std::string>());
    t.stat_names = j.at("stats").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows")) {
      auto key = row.at("key").get<std::vector<int>>();
      if (key.size() != t.stat_names.size()) throw InputError("row key arity does not match statistic list");
      t.counts[std::move(key)] += row.at("count").get<std::uint64_t>();
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed distribution JSON: ") + e.what());
  }
}

std::string table_to_csv(const DistributionTable& t) {
  std::string out;
  for (const auto& name : t.stat_names) out += name + ",";
  out += "count\n";
  for (const auto& [key, count] : t.counts) {
    for (int v : key) out += std::to_string(v) + ",";
    out += std::to_string(count) + "\n";
  }
  return out;
}

DistributionTable table_from_csv(std::string_view text, int n, Domain d) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(l);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    return cells;
  };
  if (!std::getline(in, line)) throw InputError("empty CSV");
  auto header = split(line);
  if (header.size() < 2 || header.back() != "count") throw InputError("CSV header must end with 'count'");
  header.pop_back();

  DistributionTable t{n, d, header, {}};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size() + 1) throw InputError("CSV row has wrong arity: " + line);
    std::vector<int> key;
    try {
      for (std::size_t i = 0; i < header.size(); ++i) key.push_back(std::stoi(cells[i]));
      t.counts[std::move(key)] += std::stoull(cells.back());
    } catch (const std::logic_error&) {
      throw InputError("non-numeric CSV cell in: " + line);
    }
  }
  return t;
}

}  // namespace permstat
