#pragma once

/// \file
/// Permutations in one-line notation, their symmetries, standardization,
/// boundary extrema and the scalar/set-valued statistics built on them.
///
/// Positions and values are 1-based in every public contract. Storage is an
/// ordinary 0-based vector, so `p[i]` is the value at position `i + 1`.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

/// Raised for malformed or out-of-contract input (bad text, wrong domain).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A word of pairwise distinct non-negative integers. May be empty.
using Word = std::vector<int>;
using ValueSet = std::set<int>;
using PositionSet = std::set<int>;

class Permutation {
 public:
  /// Validates that `values` is a rearrangement of 1..n with n >= 1.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](std::size_t i) const { return values_[i]; }
  /// Value at 1-based position `pos`.
  int at(int pos) const { return values_.at(static_cast<std::size_t>(pos - 1)); }
  /// 1-based position of `value`.
  int position_of(int value) const;

  const Word& word() const { return values_; }
  std::span<const int> values() const { return values_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

bool is_permutation_word(std::span<const int> values);

// ---------------------------------------------------------------------------
// Symmetries

enum class Symmetry { reverse, complement, inverse };

Permutation symmetry(const Permutation& p, Symmetry kind);
Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);
/// Reverse followed by complement.
Permutation reverse_complement(const Permutation& p);

// ---------------------------------------------------------------------------
// Standardization

struct StandardizedWord {
  Permutation pattern;
  std::vector<int> support;  // ascending

  friend bool operator==(const StandardizedWord&, const StandardizedWord&) = default;
};

/// st(w): the permutation order-isomorphic to `w` plus the letter set of `w`.
StandardizedWord standardize(std::span<const int> w);
/// st^{-1}(pattern, support). `support` need not be sorted but must hold
/// pattern.size() distinct letters.
Word unstandardize(const Permutation& pattern, std::span<const int> support);
Word unstandardize(const StandardizedWord& s);

// ---------------------------------------------------------------------------
// Boundary extrema and descents

enum class Extremum { lrmax, rlmax, lrmin, rlmin };

ValueSet boundary_extrema(std::span<const int> w, Extremum kind);
PositionSet extrema_positions(std::span<const int> w, Extremum kind);
int count_extrema(std::span<const int> w, Extremum kind);

inline int lrmax(std::span<const int> w) { return count_extrema(w, Extremum::lrmax); }
inline int rlmax(std::span<const int> w) { return count_extrema(w, Extremum::rlmax); }
inline int lrmin(std::span<const int> w) { return count_extrema(w, Extremum::lrmin); }
inline int rlmin(std::span<const int> w) { return count_extrema(w, Extremum::rlmin); }

PositionSet descent_set(std::span<const int> w);
PositionSet ascent_set(std::span<const int> w);
int des(std::span<const int> w);
int asc(std::span<const int> w);
int ides(const Permutation& p);

/// Values at positions that are weak excedances and not mid-points,
/// computed from the definition (not via the LR-maxima shortcut).
ValueSet wnm_set(const Permutation& p);
int wnm(const Permutation& p);
/// RL-maxima of the prefix strictly before the value 1.
ValueSet rlm_set(const Permutation& p);
int rlm(const Permutation& p);

struct StatReport {
  ValueSet lrmax_set, rlmax_set, lrmin_set, rlmin_set;
  PositionSet des_set, asc_set;
  int des = 0;
  int asc = 0;
  int ides = 0;
  ValueSet wnm_set, rlm_set;
  int wnm = 0;
  int rlm = 0;
};

StatReport stat_report(const Permutation& p);

// ---------------------------------------------------------------------------
// Vincular patterns

class VincularPattern {
 public:
  /// `adjacency` holds 1-based i meaning pattern positions i and i+1 must
  /// occupy consecutive host positions.
  VincularPattern(Permutation pattern, std::set<int> adjacency);

  const Permutation& pattern() const { return pattern_; }
  const std::set<int>& adjacency() const { return adjacency_; }
  bool adjacent_after(int i) const { return adjacency_.contains(i); }

 private:
  Permutation pattern_;
  std::set<int> adjacency_;
};

int count_vincular(const Permutation& p, const VincularPattern& pat);
inline bool avoids(const Permutation& p, const VincularPattern& pat) {
  return count_vincular(p, pat) == 0;
}

/// Classical 321.
const VincularPattern& pattern_321();
/// All three letters underlined: consecutive descending triples.
const VincularPattern& pattern_321_consecutive();
/// 31 underlined, 2 free.
const VincularPattern& pattern_312_vincular();

/// Consecutive descending triples in any word.
int count_consecutive_321(std::span<const int> w);
int u321(const Permutation& p);
int u312(const Permutation& p);
bool avoids_321(const Permutation& p);

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kMaxEnumerationN = 12;

/// Calls `f(const Permutation&)` on each element of S_n in lexicographic order.
template <typename F>
void for_each_permutation(int n, F&& f);

std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> all_permutations_avoiding_321(int n);

long long factorial(int n);

// ---------------------------------------------------------------------------
// Text format

/// Whitespace- or comma-separated one-line notation; a single digit string
/// such as "35241" is accepted for n <= 9.
Permutation parse_permutation(std::string_view text);
std::string format_word(std::span<const int> w, std::string_view sep = " ");
std::string format_permutation(const Permutation& p, std::string_view sep = " ");
/// "{6,10,11,12}"
std::string format_set(const std::set<int>& s);

template <typename F>
void for_each_permutation(int n, F&& f) {
  if (n < 1 || n > kMaxEnumerationN) {
    throw InputError("permutation length " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxEnumerationN) + "]");
  }
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i + 1;
  do {
    f(Permutation(values));
  } while (std::next_permutation(values.begin(), values.end()));
}

}  // namespace permstat
