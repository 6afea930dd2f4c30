#pragma once

/// \file
/// Enumeration domains, the statistic catalogue and joint distribution
/// tables over S_n, S_n(321), I_n and PT(n).

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "permstat/invseq.hpp"
#include "permstat/permutation.hpp"
#include "permstat/tableau.hpp"

namespace permstat {

enum class Domain { permutations, avoiding_321, inversion_sequences, tableaux };

/// "S", "S(321)", "I", "PT"
std::string_view domain_name(Domain d);
Domain parse_domain(std::string_view text);
/// Largest n the enumerator accepts for the domain.
int domain_max_n(Domain d);

using Object = std::variant<Permutation, InversionSequence, PermutationTableau>;

/// Lexicographic order for S_n, S_n(321) and I_n; tableau order as in
/// all_tableaux.
std::vector<Object> enumerate_domain(int n, Domain d);
std::string format_object(const Object& o);

/// A registered statistic, optionally shifted by a constant ("rlmax-1").
class StatExpr {
 public:
  /// Resolves `text` against the catalogue for domain `d`. Throws InputError
  /// for unknown names or a name registered only on another domain.
  StatExpr(std::string_view text, Domain d);

  int operator()(const Object& o) const { return eval_(o) + offset_; }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
  std::function<int(const Object&)> eval_;
  int offset_ = 0;
};

/// Catalogue names valid on `d`, in registration order.
std::vector<std::string> statistic_names(Domain d);

struct DistributionTable {
  int n = 0;
  Domain domain = Domain::permutations;
  std::vector<std::string> stat_names;
  std::map<std::vector<int>, std::uint64_t> counts;

  std::uint64_t total() const;
  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

struct RunOptions {
  unsigned workers = 1;
};

DistributionTable joint_distribution(int n, Domain d, const std::vector<std::string>& stats,
                                     const RunOptions& opts = {});

nlohmann::json table_to_json(const DistributionTable& t);
DistributionTable table_from_json(const nlohmann::json& j);
/// Header row of statistic names plus "count", then one row per key.
std::string table_to_csv(const DistributionTable& t);
DistributionTable table_from_csv(std::string_view text, int n, Domain d);

/// Splits [0, count) into `workers` contiguous chunks and runs
/// `body(chunk, begin, end)` for each, one thread per chunk.
void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace permstat
