#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "permstat/tableau.hpp"

using namespace permstat;
using fixtures::P;

namespace {

using Fill = std::vector<std::vector<std::uint8_t>>;

bool oracle_valid(const std::vector<int>& lengths, const Fill& fill) {
  const int k = static_cast<int>(lengths.size());
  const int cols = lengths.front();
  for (int c = 0; c < cols; ++c) {
    bool has_one = false;
    for (int r = 0; r < k; ++r) has_one |= c < lengths[r] && fill[r][c];
    if (!has_one) return false;
  }
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < lengths[r]; ++c) {
      if (fill[r][c]) continue;
      bool above = false, left = false;
      for (int rr = 0; rr < r; ++rr) above |= fill[rr][c] != 0;
      for (int cc = 0; cc < c; ++cc) left |= fill[r][cc] != 0;
      if (above && left) return false;
    }
  }
  return true;
}

// Counts valid fillings of every shape by trying all 0/1 assignments.
long long oracle_count(int n) {
  long long total = 0;
  for (int k = 1; k <= n; ++k) {
    const int cols = n - k;
    std::vector<int> lengths(static_cast<std::size_t>(k));
    auto shapes = [&](auto&& self, int r, int bound) -> void {
      if (r == k) {
        if (lengths.front() != cols) return;
        int cells = 0;
        for (int l : lengths) cells += l;
        for (long long mask = 0; mask < (1LL << cells); ++mask) {
          Fill fill;
          int bit = 0;
          for (int l : lengths) {
            std::vector<std::uint8_t> row;
            for (int c = 0; c < l; ++c) row.push_back(static_cast<std::uint8_t>((mask >> bit++) & 1));
            fill.push_back(row);
          }
          total += oracle_valid(lengths, fill);
        }
        return;
      }
      for (int len = (r == 0 ? cols : bound); len >= 0; --len) {
        lengths[static_cast<std::size_t>(r)] = len;
        self(self, r + 1, len);
        if (r == 0) break;
      }
    };
    shapes(shapes, 0, cols);
  }
  return total;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(fixtures::figure_one());
  try {
    PermutationTableau::validate({1}, {{0}});
    FAIL("expected an error");
  } catch (const TableauError& e) {
    CHECK(e.kind() == TableauError::Kind::empty_column);
    CHECK(std::string(e.what()).find("empty column") != std::string::npos);
  }
  CHECK_NOTHROW(PermutationTableau::validate({2, 2}, {{0, 1}, {1, 1}}));
  try {
    PermutationTableau::validate({2, 2}, {{1, 1}, {1, 0}});
    FAIL("expected an error");
  } catch (const TableauError& e) {
    CHECK(e.kind() == TableauError::Kind::restricted_zero);
    REQUIRE(e.witness().has_value());
    CHECK(*e.witness() == Cell{2, 2});
  }
  CHECK_THROWS_AS(PermutationTableau::validate({1, 2}, {{1}, {1, 1}}), TableauError);
  CHECK_THROWS_AS(PermutationTableau::validate({2}, {{1}}), TableauError);
  CHECK_NOTHROW(PermutationTableau::validate({0}, {{}}));
}

TEST_CASE("border labels") {
  const auto b = border_labels(fixtures::figure_one());
  CHECK(b.rows == std::vector<int>{1, 2, 4, 7, 10});
  CHECK(b.columns == std::vector<int>{11, 9, 8, 6, 5, 3});
  const auto single = border_labels(PermutationTableau::validate({0}, {{}}));
  CHECK(single.rows == std::vector<int>{1});
  CHECK(single.columns.empty());
  const auto two = border_labels(PermutationTableau::validate({1}, {{1}}));
  CHECK(two.rows == std::vector<int>{1});
  CHECK(two.columns == std::vector<int>{2});
}

TEST_CASE("alternative representation") {
  const auto alt = to_alternative(fixtures::figure_one());
  std::set<std::pair<int, int>> ups, lefts;
  for (int r = 1; r <= 5; ++r) {
    for (int c = 1; c <= alt.row_lengths[static_cast<std::size_t>(r - 1)]; ++c) {
      if (alt.at(r, c) == Mark::up) ups.insert({r, c});
      if (alt.at(r, c) == Mark::left) lefts.insert({r, c});
    }
  }
  CHECK(ups == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 6}, {2, 4}, {2, 5}, {5, 1}});
  CHECK(lefts == std::set<std::pair<int, int>>{{2, 3}, {3, 4}});
  CHECK(from_alternative(alt) == fixtures::figure_one());

  const auto small = to_alternative(PermutationTableau::validate({2, 2}, {{1, 1}, {0, 0}}));
  CHECK(small.at(1, 1) == Mark::up);
  CHECK(small.at(1, 2) == Mark::up);
  CHECK(small.at(2, 1) == Mark::empty);
  CHECK(small.at(2, 2) == Mark::left);

  const auto column = to_alternative(PermutationTableau::validate({1, 1, 1}, {{1}, {1}, {1}}));
  CHECK(column.at(1, 1) == Mark::up);
  CHECK(column.at(2, 1) == Mark::empty);
  CHECK(column.at(3, 1) == Mark::empty);

  for (int n = 1; n <= 6; ++n)
    for (const auto& t : all_tableaux(n)) REQUIRE(from_alternative(to_alternative(t)) == t);
}

TEST_CASE("maps to permutations on the worked tableau") {
  const auto t = fixtures::figure_one();
  CHECK(format_permutation(phi_zigzag(t), ",") == "8,6,1,5,3,4,9,2,7,11,10");
  CHECK(format_permutation(gamma_cn(t), ",") == "9,4,6,5,2,8,3,1,7,11,10");
  const auto s = tableau_stats(t);
  CHECK(s.urr == 3);
  CHECK(s.unrestricted_row_labels == std::vector<int>{1, 7, 10});
  CHECK(s.topone == 3);
  CHECK(s.urr == rlmin(gamma_cn(t).values()));
  CHECK(s.topone == rlm(gamma_cn(t)));
  CHECK(s.urr == wnm(phi_zigzag(t)));
}

TEST_CASE("small tableaux") {
  const auto one = PermutationTableau::validate({0}, {{}});
  CHECK(phi_zigzag(one) == P("1"));
  CHECK(gamma_cn(one) == P("1"));
  CHECK(tableau_stats(one).urr == 1);
  CHECK(tableau_stats(one).topone == 0);
  const auto two = PermutationTableau::validate({1}, {{1}});
  CHECK(tableau_stats(two).urr == 1);
  CHECK(tableau_stats(two).topone == 1);
}

TEST_CASE("enumeration count matches a brute-force filling oracle") {
  for (int n = 1; n <= 6; ++n) CHECK(static_cast<long long>(all_tableaux(n).size()) == oracle_count(n));
  CHECK(all_tableaux(1).size() == 1);
  CHECK(all_tableaux(3).size() == 6);
  CHECK(all_tableaux(7).size() == 5040);
  CHECK_THROWS_AS(all_tableaux(0), InputError);
}

TEST_CASE("both maps are bijections onto S_n") {
  for (int n = 1; n <= 6; ++n) {
    std::set<Permutation> phi_images, gamma_images;
    for (const auto& t : all_tableaux(n)) {
      phi_images.insert(phi_zigzag(t));
      gamma_images.insert(gamma_cn(t));
    }
    CHECK(static_cast<long long>(phi_images.size()) == factorial(n));
    CHECK(static_cast<long long>(gamma_images.size()) == factorial(n));
  }
}

TEST_CASE("text format round trip") {
  const auto t = fixtures::figure_one();
  CHECK(parse_tableau(format_tableau(t)) == t);
  CHECK(compact_tableau(t) == "6,6,5,3,1:011001/000111/00001/011/1");
  CHECK(parse_tableau("3 3\n0,0,0\n\n\n\n") == PermutationTableau::validate({0, 0, 0}, {{}, {}, {}}));
  CHECK_THROWS_AS(parse_tableau("3 1\n2\n12\n"), TableauError);
  CHECK_THROWS_AS(parse_tableau("4 1\n2\n11\n"), TableauError);
  CHECK_THROWS_AS(parse_tableau("garbage"), TableauError);
  const auto alt_text = format_alt_tableau(to_alternative(t));
  CHECK(alt_text.find("\n.UU..U\n..LUU.\n...L.\n...\nU\n") != std::string::npos);
}
