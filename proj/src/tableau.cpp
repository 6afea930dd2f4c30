#include "permstat/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permstat {

namespace {

std::string cell_text(int row, int col) { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }

}  // namespace

PermutationTableau PermutationTableau::validate(std::vector<int> row_lengths,
                                                std::vector<std::vector<std::uint8_t>> fill) {
  using Kind = TableauError::Kind;
  if (row_lengths.empty()) throw TableauError(Kind::malformed, "tableau has no rows");
  if (fill.size() != row_lengths.size()) {
    throw TableauError(Kind::malformed, "fill has " + std::to_string(fill.size()) + " rows, shape has " +
                                            std::to_string(row_lengths.size()));
  }
  for (std::size_t r = 0; r < row_lengths.size(); ++r) {
    if (row_lengths[r] < 0) throw TableauError(Kind::malformed, "negative row length");
    if (r > 0 && row_lengths[r] > row_lengths[r - 1]) {
      throw TableauError(Kind::shape_not_decreasing, "shape not weakly decreasing at row " + std::to_string(r + 1));
    }
    if (fill[r].size() != static_cast<std::size_t>(row_lengths[r])) {
      throw TableauError(Kind::malformed, "row " + std::to_string(r + 1) + " has " + std::to_string(fill[r].size()) +
                                              " cells, expected " + std::to_string(row_lengths[r]));
    }
    for (auto& bit : fill[r]) {
      if (bit > 1) throw TableauError(Kind::malformed, "fill entries must be 0 or 1");
    }
  }

  const int columns = row_lengths.front();
  for (int c = 1; c <= columns; ++c) {
    bool has_one = false;
    for (std::size_t r = 0; r < row_lengths.size() && row_lengths[r] >= c; ++r) {
      has_one = has_one || fill[r][static_cast<std::size_t>(c - 1)];
    }
    if (!has_one) throw TableauError(Kind::empty_column, "empty column " + std::to_string(c), Cell{1, c});
  }

  std::vector<bool> one_above(static_cast<std::size_t>(columns), false);
  for (std::size_t r = 0; r < row_lengths.size(); ++r) {
    bool one_left = false;
    for (int c = 1; c <= row_lengths[r]; ++c) {
      const auto ci = static_cast<std::size_t>(c - 1);
      if (fill[r][ci]) {
        one_left = true;
        one_above[ci] = true;
      } else if (one_left && one_above[ci]) {
        const int row = static_cast<int>(r) + 1;
        throw TableauError(Kind::restricted_zero, "restricted-0 violation at " + cell_text(row, c), Cell{row, c});
      }
    }
  }
  return PermutationTableau(std::move(row_lengths), std::move(fill));
}

int PermutationTableau::column_height(int col) const {
  int h = 0;
  while (h < rows() && row_lengths_[static_cast<std::size_t>(h)] >= col) ++h;
  return h;
}

// ---------------------------------------------------------------------------

BorderLabels border_labels(const PermutationTableau& t) {
  // Walk the south-east border from the north-east corner: a south step for
  // each row, then west steps down to the next row's length.
  BorderLabels out;
  out.columns.assign(static_cast<std::size_t>(t.columns()), 0);
  int label = 0;
  for (int r = 1; r <= t.rows(); ++r) {
    out.rows.push_back(++label);
    const int next = r < t.rows() ? t.row_length(r + 1) : 0;
    for (int c = t.row_length(r); c > next; --c) out.columns[static_cast<std::size_t>(c - 1)] = ++label;
  }
  return out;
}

bool restricted_zero(const PermutationTableau& t, int row, int col) {
  if (t.one(row, col)) return false;
  for (int r = 1; r < row; ++r)
    if (t.one(r, col)) return true;
  return false;
}

AltTableau to_alternative(const PermutationTableau& t) {
  AltTableau alt;
  alt.row_lengths = t.row_lengths();
  for (int r = 1; r <= t.rows(); ++r) alt.marks.emplace_back(static_cast<std::size_t>(t.row_length(r)), Mark::empty);
  auto mark = [&](int r, int c) -> Mark& {
    return alt.marks[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
  };
  for (int c = 1; c <= t.columns(); ++c) {
    for (int r = 1; r <= t.column_height(c); ++r) {
      if (t.one(r, c)) {
        mark(r, c) = Mark::up;
        break;
      }
    }
  }
  for (int r = 1; r <= t.rows(); ++r) {
    for (int c = t.row_length(r); c >= 1; --c) {
      if (restricted_zero(t, r, c)) {
        mark(r, c) = Mark::left;
        break;
      }
    }
  }
  return alt;
}

PermutationTableau from_alternative(const AltTableau& alt) {
  // Above an Up: 0. At an Up: 1. Below an Up: restricted, so 0 up to and
  // including the row's Left, 1 to the right of it.
  const int rows = static_cast<int>(alt.row_lengths.size());
  const int columns = rows ? alt.row_lengths.front() : 0;
  std::vector<int> up_row(static_cast<std::size_t>(columns) + 1, 0);
  std::vector<int> left_col(static_cast<std::size_t>(rows) + 1, 0);
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= alt.row_lengths[static_cast<std::size_t>(r - 1)]; ++c) {
      if (alt.at(r, c) == Mark::up) {
        if (up_row[static_cast<std::size_t>(c)] != 0) {
          throw TableauError(TableauError::Kind::malformed, "two Up marks in column " + std::to_string(c));
        }
        up_row[static_cast<std::size_t>(c)] = r;
      } else if (alt.at(r, c) == Mark::left) {
        left_col[static_cast<std::size_t>(r)] = c;
      }
    }
  }
  std::vector<std::vector<std::uint8_t>> fill;
  for (int r = 1; r <= rows; ++r) {
    std::vector<std::uint8_t> row(static_cast<std::size_t>(alt.row_lengths[static_cast<std::size_t>(r - 1)]), 0);
    for (int c = 1; c <= static_cast<int>(row.size()); ++c) {
      const int up = up_row[static_cast<std::size_t>(c)];
      if (up == 0) throw TableauError(TableauError::Kind::empty_column, "no Up mark in column " + std::to_string(c));
      if (r == up) {
        row[static_cast<std::size_t>(c - 1)] = 1;
      } else if (r > up) {
        row[static_cast<std::size_t>(c - 1)] = c > left_col[static_cast<std::size_t>(r)] ? 1 : 0;
      }
    }
    fill.push_back(std::move(row));
  }
  return PermutationTableau::validate(alt.row_lengths, std::move(fill));
}

// ---------------------------------------------------------------------------

Permutation phi_zigzag(const PermutationTableau& t) {
  const auto labels = border_labels(t);
  const int n = t.length();
  // owner[label] = (is_row, index)
  std::vector<std::pair<bool, int>> owner(static_cast<std::size_t>(n) + 1);
  for (int r = 1; r <= t.rows(); ++r) owner[static_cast<std::size_t>(labels.rows[static_cast<std::size_t>(r - 1)])] = {true, r};
  for (int c = 1; c <= t.columns(); ++c) {
    owner[static_cast<std::size_t>(labels.columns[static_cast<std::size_t>(c - 1)])] = {false, c};
  }

  std::vector<int> out(static_cast<std::size_t>(n));
  for (int label = 1; label <= n; ++label) {
    auto [east, index] = owner[static_cast<std::size_t>(label)];
    int r = east ? index : 1;
    int c = east ? 1 : index;
    while (t.in_shape(r, c)) {
      if (t.one(r, c)) east = !east;
      if (east) ++c; else ++r;
    }
    out[static_cast<std::size_t>(label - 1)] =
        east ? labels.rows[static_cast<std::size_t>(r - 1)] : labels.columns[static_cast<std::size_t>(c - 1)];
  }
  return Permutation(std::move(out));
}

Permutation gamma_cn(const PermutationTableau& t) {
  const auto labels = border_labels(t);
  const auto alt = to_alternative(t);
  const auto row_label = [&](int r) { return labels.rows[static_cast<std::size_t>(r - 1)]; };

  std::vector<int> word;
  std::vector<bool> has_left(static_cast<std::size_t>(t.rows()) + 1, false);
  for (int r = 1; r <= t.rows(); ++r)
    for (int c = 1; c <= t.row_length(r); ++c)
      if (alt.at(r, c) == Mark::left) has_left[static_cast<std::size_t>(r)] = true;
  for (int r = 1; r <= t.rows(); ++r)
    if (!has_left[static_cast<std::size_t>(r)]) word.push_back(row_label(r));  // already increasing

  for (int c = 1; c <= t.columns(); ++c) {
    int up = 0;
    std::vector<int> inserted;
    for (int r = 1; r <= t.column_height(c); ++r) {
      if (alt.at(r, c) == Mark::up) up = r;
      if (alt.at(r, c) == Mark::left) inserted.push_back(row_label(r));
    }
    inserted.push_back(labels.columns[static_cast<std::size_t>(c - 1)]);
    std::sort(inserted.begin(), inserted.end());
    auto anchor = std::find(word.begin(), word.end(), row_label(up));
    if (anchor == word.end()) throw std::logic_error("row of an Up mark was never written");
    word.insert(anchor, inserted.begin(), inserted.end());
  }
  return Permutation(std::move(word));
}

TableauStats tableau_stats(const PermutationTableau& t) {
  TableauStats s;
  const auto labels = border_labels(t);
  for (int r = 1; r <= t.rows(); ++r) {
    bool unrestricted = true;
    for (int c = 1; c <= t.row_length(r) && unrestricted; ++c) unrestricted = !restricted_zero(t, r, c);
    if (unrestricted) s.unrestricted_row_labels.push_back(labels.rows[static_cast<std::size_t>(r - 1)]);
  }
  s.urr = static_cast<int>(s.unrestricted_row_labels.size());
  for (int c = 1; c <= t.row_length(1); ++c) s.topone += t.one(1, c);
  return s;
}

// ---------------------------------------------------------------------------

namespace {

void shapes_from(int rows_left, int bound, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (rows_left == 0) {
    out.push_back(prefix);
    return;
  }
  for (int len = bound; len >= 0; --len) {
    prefix.push_back(len);
    shapes_from(rows_left - 1, len, prefix, out);
    prefix.pop_back();
  }
}

struct FillSearch {
  const std::vector<int>& shape;
  std::vector<int> heights;
  std::vector<std::vector<std::uint8_t>> fill;
  std::vector<bool> one_above;
  std::vector<PermutationTableau>& out;

  void run(std::size_t r, int c, bool one_left) {
    if (r == shape.size()) {
      out.push_back(PermutationTableau::validate(shape, fill));
      return;
    }
    if (c > shape[r]) {
      run(r + 1, 1, false);
      return;
    }
    const auto ci = static_cast<std::size_t>(c - 1);
    const bool last_in_column = static_cast<int>(r) + 1 == heights[ci];
    for (std::uint8_t bit : {std::uint8_t{0}, std::uint8_t{1}}) {
      if (bit == 0 && one_left && one_above[ci]) continue;
      if (bit == 0 && last_in_column && !one_above[ci]) continue;
      const bool saved = one_above[ci];
      fill[r][ci] = bit;
      if (bit) one_above[ci] = true;
      run(r, c + 1, one_left || bit);
      one_above[ci] = saved;
    }
    fill[r][ci] = 0;
  }
};

}  // namespace

std::vector<PermutationTableau> all_tableaux(int n) {
  if (n < 1 || n > kMaxTableauN) {
    throw InputError("tableau length " + std::to_string(n) + " outside [1, " + std::to_string(kMaxTableauN) + "]");
  }
  std::vector<PermutationTableau> out;
  for (int k = 1; k <= n; ++k) {
    const int m = n - k;
    std::vector<std::vector<int>> shapes;
    std::vector<int> prefix{m};
    shapes_from(k - 1, m, prefix, shapes);
    for (const auto& shape : shapes) {
      FillSearch search{shape, {}, {}, std::vector<bool>(static_cast<std::size_t>(m), false), out};
      for (int c = 1; c <= m; ++c) {
        int h = 0;
        while (h < k && shape[static_cast<std::size_t>(h)] >= c) ++h;
        search.heights.push_back(h);
      }
      for (int len : shape) search.fill.emplace_back(static_cast<std::size_t>(len), 0);
      search.run(0, 1, false);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  return lines;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const char* what) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw TableauError(TableauError::Kind::malformed, std::string("bad ") + what + " '" + s + "'");
  }
  return std::stoi(s);
}

std::string header(const std::vector<int>& row_lengths) {
  const int k = static_cast<int>(row_lengths.size());
  const int n = k + (k ? row_lengths.front() : 0);
  return std::to_string(n) + " " + std::to_string(k) + "\n" + format_word(row_lengths, ",") + "\n";
}

}  // namespace

PermutationTableau parse_tableau(std::string_view text) {
  using Kind = TableauError::Kind;
  const auto lines = split_lines(text);
  if (lines.size() < 2) throw TableauError(Kind::malformed, "tableau text needs header lines \"n k\" and row lengths");

  std::istringstream head(lines[0]);
  std::string n_text, k_text, extra;
  head >> n_text >> k_text;
  if (head >> extra) throw TableauError(Kind::malformed, "first line must be \"n k\"");
  const int n = parse_int(n_text, "length");
  const int k = parse_int(k_text, "row count");
  if (k < 1) throw TableauError(Kind::malformed, "row count must be at least 1");

  std::vector<int> row_lengths;
  std::string token;
  std::istringstream lens(lines[1]);
  while (std::getline(lens, token, ',')) row_lengths.push_back(parse_int(trim(token), "row length"));
  if (static_cast<int>(row_lengths.size()) != k) {
    throw TableauError(Kind::malformed, "expected " + std::to_string(k) + " row lengths, got " +
                                            std::to_string(row_lengths.size()));
  }
  if (k + row_lengths.front() != n) {
    throw TableauError(Kind::malformed, "length " + std::to_string(n) + " != rows + columns (" +
                                            std::to_string(k + row_lengths.front()) + ")");
  }
  if (lines.size() < 2 + static_cast<std::size_t>(k)) {
    // Trailing empty rows may have lost their newline.
    bool rest_empty = true;
    for (std::size_t i = lines.size(); i < 2 + static_cast<std::size_t>(k); ++i)
      rest_empty = rest_empty && row_lengths[i - 2] == 0;
    if (!rest_empty) throw TableauError(Kind::malformed, "missing fill rows");
  }
  for (std::size_t i = 2 + static_cast<std::size_t>(k); i < lines.size(); ++i) {
    if (!trim(lines[i]).empty()) throw TableauError(Kind::malformed, "trailing content after fill rows");
  }

  std::vector<std::vector<std::uint8_t>> fill;
  for (int r = 0; r < k; ++r) {
    const auto idx = static_cast<std::size_t>(r) + 2;
    const std::string row = idx < lines.size() ? trim(lines[idx]) : "";
    std::vector<std::uint8_t> bits;
    for (char ch : row) {
      if (ch != '0' && ch != '1') throw TableauError(Kind::malformed, "fill rows must contain only 0 and 1");
      bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    fill.push_back(std::move(bits));
  }
  return PermutationTableau::validate(std::move(row_lengths), std::move(fill));
}

std::string format_tableau(const PermutationTableau& t) {
  std::string out = header(t.row_lengths());
  for (const auto& row : t.fill()) {
    for (auto bit : row) out.push_back(bit ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::string format_alt_tableau(const AltTableau& alt) {
  std::string out = header(alt.row_lengths);
  for (const auto& row : alt.marks) {
    for (auto m : row) out.push_back(static_cast<char>(m));
    out.push_back('\n');
  }
  return out;
}

std::string compact_tableau(const PermutationTableau& t) {
  std::string out = format_word(t.row_lengths(), ",") + ":";
  for (std::size_t r = 0; r < t.fill().size(); ++r) {
    if (r) out.push_back('/');
    for (auto bit : t.fill()[r]) out.push_back(bit ? '1' : '0');
  }
  return out;
}

}  // namespace permstat
