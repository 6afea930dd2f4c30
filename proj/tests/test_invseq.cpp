#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "permstat/invseq.hpp"

using namespace permstat;
using fixtures::P;

namespace {

InversionSequence S(const char* text) { return parse_inversion_sequence(text); }

std::vector<int> oracle_gamma(const std::vector<int>& s) {
  std::vector<int> out;
  for (int v : s) out.insert(out.begin() + v, v);
  return out;
}

}  // namespace

TEST_CASE("inversion sequence validation and text") {
  CHECK_THROWS_AS(InversionSequence({1}), InputError);
  CHECK_THROWS_AS(InversionSequence({0, 2}), InputError);
  CHECK_THROWS_AS(InversionSequence({0, -1}), InputError);
  CHECK(S("00210").entries() == std::vector<int>{0, 0, 2, 1, 0});
  CHECK(S("0,0,2,1,0") == S("00210"));
  CHECK(format_inversion_sequence(S("00210")) == "00210");
  std::vector<int> long_seq(11, 0);
  long_seq[10] = 10;
  CHECK(format_inversion_sequence(InversionSequence(long_seq)) == "0,0,0,0,0,0,0,0,0,0,10");
  CHECK_THROWS_AS(S("0a"), InputError);
}

TEST_CASE("statistics") {
  const auto a = invseq_stats(S("00113213"));
  CHECK(a.zero == 2);
  CHECK(a.dist == 3);
  CHECK(a.max_stat == 1);
  CHECK(a.rlmin_strict == 3);
  CHECK(a.rlmin_strict_set == PositionSet{2, 7, 8});

  const auto z = invseq_stats(S("000000"));
  CHECK(z.zero == 6);
  CHECK(z.dist == 0);
  CHECK(z.max_stat == 1);
  CHECK(z.rlmin_strict == 1);

  const auto b = invseq_stats(S("00210"));
  CHECK(b.zero_set == PositionSet{1, 2, 5});
  CHECK(b.max_set == PositionSet{1, 3});
  CHECK(b.dist_set == PositionSet{3, 4});
  CHECK(b.asc_set == PositionSet{2});
  CHECK(b.rlmin_strict_set == PositionSet{5});

  CHECK(invseq_stats(S("01132130")).rlmin_strict == 1);
}

TEST_CASE("gamma") {
  CHECK(gamma_insert(S("00113213")) == S("01132130"));
  CHECK(gamma_insert(S("00210")) == S("00102"));
  CHECK(gamma_insert(S("0")) == S("0"));
  for (int n = 1; n <= 7; ++n) {
    for (const auto& s : all_inversion_sequences(n)) {
      const auto g = gamma_insert(s);
      REQUIRE(g.entries() == oracle_gamma(s.entries()));
      REQUIRE(gamma_insert(g) == s);
    }
  }
}

TEST_CASE("code b") {
  CHECK(code_b(P("24135")) == S("00210"));
  CHECK(code_b(P("14352")) == S("00102"));
  CHECK(code_b(P("1")) == S("0"));
  // Regression vector: identity codes to all zeros.
  CHECK(code_b(Permutation::identity(6)) == S("000000"));
  CHECK(code_b_inv(S("00102")) == P("14352"));
  CHECK(code_b_inv(S("0")) == P("1"));
}

TEST_CASE("slices") {
  CHECK(format_slice(initial_slice(5)).size() > 0);
  const auto trace = code_b_trace(P("24135"));
  REQUIRE(trace.size() == 6);
  CHECK(trace[0] == Slice{{0, 5, 0}});
  for (std::size_t i = 0; i < trace.size(); ++i) CHECK(slice_well_formed(trace[i], static_cast<int>(i)));
  CHECK_FALSE(slice_well_formed(Slice{{0, 2, 1}, {3, 5, 0}}, 2));
}

TEST_CASE("code b is a bijection with a working inverse") {
  for (int n = 1; n <= 6; ++n) {
    std::set<InversionSequence> images;
    for_each_permutation(n, [&](const Permutation& p) {
      const auto s = code_b(p);
      images.insert(s);
      REQUIRE(code_b_inv(s) == p);
    });
    CHECK(static_cast<long long>(images.size()) == factorial(n));
  }
  CHECK(all_inversion_sequences(4).size() == 24);
  CHECK(all_inversion_sequences(3).front() == S("000"));
  CHECK(all_inversion_sequences(3).back() == S("012"));
}

TEST_CASE("alpha chain") {
  const auto t = alpha_trace(P("35241"));
  CHECK(t.complemented == P("31425"));
  CHECK(t.inverted == P("24135"));
  CHECK(t.coded == S("00210"));
  CHECK(t.swapped == S("00102"));
  CHECK(t.decoded == P("14352"));
  CHECK(t.reinverted == P("15324"));
  CHECK(t.result == P("51342"));
  CHECK(alpha(P("1")) == P("1"));
  for_each_permutation(6, [](const Permutation& p) {
    const auto q = alpha(p);
    REQUIRE(alpha(q) == p);
    REQUIRE(asc(p.values()) == asc(q.values()));
    REQUIRE(rlmax(p.values()) == rlmax(q.values()));
    REQUIRE(lrmax(p.values()) == rlmin(q.values()));
    REQUIRE(rlmin(p.values()) == lrmax(q.values()));
  });
}

TEST_CASE("beta") {
  CHECK(beta(P("593721684")) == P("624981573"));
  CHECK(beta(P("1")) == P("1"));
  CHECK(beta(P("12")) == P("12"));
  CHECK(beta(P("21")) == P("21"));
  for_each_permutation(6, [](const Permutation& p) {
    const auto q = beta(p);
    REQUIRE(rlm(p) == rlmax(q.values()) - 1);
    REQUIRE(wnm(p) == rlmin(q.values()));
    REQUIRE(asc(p.values()) == asc(q.values()));
  });
}
