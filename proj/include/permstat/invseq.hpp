#pragma once

/// \file
/// Inversion sequences s_1..s_n with 0 <= s_i <= i-1, their statistics, the
/// insertion involution gamma, the labelled-interval permutation code b and
/// the composite maps alpha and beta on permutations.

#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

class InversionSequence {
 public:
  explicit InversionSequence(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](std::size_t i) const { return entries_[i]; }
  /// Entry at 1-based position `pos`.
  int at(int pos) const { return entries_.at(static_cast<std::size_t>(pos - 1)); }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const InversionSequence&, const InversionSequence&) = default;
  friend auto operator<=>(const InversionSequence&, const InversionSequence&) = default;

 private:
  std::vector<int> entries_;
};

struct InvSeqStats {
  PositionSet zero_set;          // s_i = 0
  PositionSet max_set;           // s_i = i - 1
  PositionSet dist_set;          // i >= 2, s_i != 0, s_i differs from every later entry
  PositionSet asc_set;           // s_i < s_{i+1}
  PositionSet rlmin_strict_set;  // s_i < s_j for every j > i
  int zero = 0;
  int max_stat = 0;
  int dist = 0;
  int asc = 0;
  int rlmin_strict = 0;
};

InvSeqStats invseq_stats(const InversionSequence& s);

/// gamma(s_1..s_n) is gamma(s_1..s_{n-1}) with s_n inserted at 1-based
/// position s_n + 1.
InversionSequence gamma_insert(const InversionSequence& s);

// ---------------------------------------------------------------------------
// Code b

struct LabeledInterval {
  int lo = 0;
  int hi = 0;
  int label = 0;

  bool contains(int v) const { return lo <= v && v <= hi; }
  friend bool operator==(const LabeledInterval&, const LabeledInterval&) = default;
};

/// Ordered by decreasing values: the leftmost interval holds the largest.
using Slice = std::vector<LabeledInterval>;

Slice initial_slice(int n);

/// Consumes `value` from `slice` and returns the label of the interval that
/// held it.
int slice_step(Slice& slice, int value);

/// True when intervals are nonempty, disjoint, strictly decreasing and their
/// labels strictly increase with every label <= `step`.
bool slice_well_formed(const Slice& slice, int step);

/// U_0 .. U_n for p.
std::vector<Slice> code_b_trace(const Permutation& p);
InversionSequence code_b(const Permutation& p);
/// Unique p with code_b(p) = s, by depth-first search over the slices.
Permutation code_b_inv(const InversionSequence& s);

std::string format_slice(const Slice& slice);

// ---------------------------------------------------------------------------
// alpha and beta

struct AlphaTrace {
  Permutation input;
  Permutation complemented;
  Permutation inverted;
  InversionSequence coded;
  InversionSequence swapped;
  Permutation decoded;
  Permutation reinverted;
  Permutation result;
};

/// complement, inverse, b, gamma, b^{-1}, inverse, complement.
AlphaTrace alpha_trace(const Permutation& p);
Permutation alpha(const Permutation& p);

/// With p = x 1 y: y' n x' where x' carries alpha of st(x) and y' the
/// reverse-complement of st(y), both over the mirrored letter sets.
Permutation beta(const Permutation& p);

// ---------------------------------------------------------------------------

inline constexpr int kMaxInvSeqN = 10;

/// All of I_n in lexicographic order.
std::vector<InversionSequence> all_inversion_sequences(int n);

/// Digit string ("00210") or comma/space separated.
InversionSequence parse_inversion_sequence(std::string_view text);
/// Contiguous digits when n <= 10, otherwise comma-separated.
std::string format_inversion_sequence(const InversionSequence& s);

}  // namespace permstat
