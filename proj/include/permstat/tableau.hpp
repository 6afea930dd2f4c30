#pragma once

/// \file
/// Permutation tableaux: Ferrers shapes (empty rows allowed) with a 0/1
/// filling in which every column holds a 1 and no 0 has both a 1 above it in
/// its column and a 1 to its left in its row.
///
/// Rows are indexed top to bottom and columns left to right, both 1-based.
/// The length of a tableau is rows + columns.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

class TableauError : public InputError {
 public:
  enum class Kind { empty_column, restricted_zero, shape_not_decreasing, malformed };

  TableauError(Kind kind, std::string message, std::optional<Cell> witness = std::nullopt)
      : InputError(std::move(message)), kind_(kind), witness_(witness) {}

  Kind kind() const { return kind_; }
  const std::optional<Cell>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::optional<Cell> witness_;
};

class PermutationTableau {
 public:
  /// Checks the shape and both filling conditions; throws TableauError.
  /// `fill[r]` must have exactly `row_lengths[r]` entries.
  static PermutationTableau validate(std::vector<int> row_lengths, std::vector<std::vector<std::uint8_t>> fill);

  int length() const { return rows() + columns(); }
  int rows() const { return static_cast<int>(row_lengths_.size()); }
  int columns() const { return row_lengths_.empty() ? 0 : row_lengths_.front(); }
  int row_length(int row) const { return row_lengths_.at(static_cast<std::size_t>(row - 1)); }
  /// Number of rows reaching column `col`.
  int column_height(int col) const;
  bool in_shape(int row, int col) const {
    return row >= 1 && row <= rows() && col >= 1 && col <= row_length(row);
  }
  bool one(int row, int col) const {
    return fill_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] != 0;
  }

  const std::vector<int>& row_lengths() const { return row_lengths_; }
  const std::vector<std::vector<std::uint8_t>>& fill() const { return fill_; }

  friend bool operator==(const PermutationTableau&, const PermutationTableau&) = default;

 private:
  PermutationTableau(std::vector<int> row_lengths, std::vector<std::vector<std::uint8_t>> fill)
      : row_lengths_(std::move(row_lengths)), fill_(std::move(fill)) {}

  std::vector<int> row_lengths_;
  std::vector<std::vector<std::uint8_t>> fill_;
};

enum class Mark : char { empty = '.', up = 'U', left = 'L' };

/// The arrow form of a tableau: an Up at the topmost 1 of each column and a
/// Left at the rightmost restricted 0 of each row.
struct AltTableau {
  std::vector<int> row_lengths;
  std::vector<std::vector<Mark>> marks;

  Mark at(int row, int col) const {
    return marks[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
  }
  friend bool operator==(const AltTableau&, const AltTableau&) = default;
};

struct BorderLabels {
  std::vector<int> rows;     // top to bottom
  std::vector<int> columns;  // left to right
};

struct TableauStats {
  int urr = 0;
  int topone = 0;
  std::vector<int> unrestricted_row_labels;  // ascending
};

BorderLabels border_labels(const PermutationTableau& t);

/// A 0 is restricted when some 1 sits above it in its column.
bool restricted_zero(const PermutationTableau& t, int row, int col);

AltTableau to_alternative(const PermutationTableau& t);
/// Rebuilds the 0/1 filling from the arrow marks.
PermutationTableau from_alternative(const AltTableau& alt);

/// Zigzag map: the path for label i turns at every 1 and exits at the label
/// that becomes the i-th letter.
Permutation phi_zigzag(const PermutationTableau& t);
/// Insertion map driven by the arrow form.
Permutation gamma_cn(const PermutationTableau& t);

TableauStats tableau_stats(const PermutationTableau& t);

inline constexpr int kMaxTableauN = 9;

/// Every tableau of length n, shapes by row count ascending then row-length
/// sequence lexicographically descending, fillings in row-major bit order.
std::vector<PermutationTableau> all_tableaux(int n);

/// "n k" / comma-separated row lengths / one 0-1 line per row.
PermutationTableau parse_tableau(std::string_view text);
std::string format_tableau(const PermutationTableau& t);
/// Same header lines, then rows of U, L and '.'.
std::string format_alt_tableau(const AltTableau& alt);
/// Single-line form used in witnesses, e.g. "3,1:101/0".
std::string compact_tableau(const PermutationTableau& t);

}  // namespace permstat
