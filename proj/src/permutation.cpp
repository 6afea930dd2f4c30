#include "permstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace permstat {

bool is_permutation_word(std::span<const int> values) {
  const auto n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw InputError("empty permutation");
  const auto n = values_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v == 0) throw InputError("permutation contains 0 (values are 1-based)");
    if (v < 0 || static_cast<std::size_t>(v) > n) {
      throw InputError("value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) throw InputError("repeated value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::position_of(int value) const {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) throw InputError("value " + std::to_string(value) + " not present");
  return static_cast<int>(it - values_.begin()) + 1;
}

// ---------------------------------------------------------------------------

Permutation reverse(const Permutation& p) {
  std::vector<int> out(p.word().rbegin(), p.word().rend());
  return Permutation(std::move(out));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out(p.word());
  for (int& v : out) v = n + 1 - v;
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.word().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(out));
}

Permutation reverse_complement(const Permutation& p) { return complement(reverse(p)); }

Permutation symmetry(const Permutation& p, Symmetry kind) {
  switch (kind) {
    case Symmetry::reverse: return reverse(p);
    case Symmetry::complement: return complement(p);
    case Symmetry::inverse: return inverse(p);
  }
  return p;
}

// ---------------------------------------------------------------------------

StandardizedWord standardize(std::span<const int> w) {
  if (w.empty()) throw InputError("empty word");
  std::vector<int> support(w.begin(), w.end());
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw InputError("word has repeated letters");
  }
  std::vector<int> pattern(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto it = std::lower_bound(support.begin(), support.end(), w[i]);
    pattern[i] = static_cast<int>(it - support.begin()) + 1;
  }
  return {Permutation(std::move(pattern)), std::move(support)};
}

Word unstandardize(const Permutation& pattern, std::span<const int> support) {
  if (support.size() != pattern.word().size()) {
    throw InputError("support has " + std::to_string(support.size()) + " letters, pattern has " +
                     std::to_string(pattern.size()));
  }
  std::vector<int> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("support has repeated letters");
  }
  Word out(pattern.word().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sorted[static_cast<std::size_t>(pattern[i] - 1)];
  return out;
}

Word unstandardize(const StandardizedWord& s) { return unstandardize(s.pattern, s.support); }

// ---------------------------------------------------------------------------

namespace {

// Marks w[i] as an extremum of the given kind; scan direction and comparison
// follow from the kind.
std::vector<bool> extremum_flags(std::span<const int> w, Extremum kind) {
  std::vector<bool> flags(w.size(), false);
  if (w.empty()) return flags;
  const bool from_left = kind == Extremum::lrmax || kind == Extremum::lrmin;
  const bool is_max = kind == Extremum::lrmax || kind == Extremum::rlmax;
  const std::size_t n = w.size();
  int best = 0;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = from_left ? step : n - 1 - step;
    if (step == 0 || (is_max ? w[i] > best : w[i] < best)) {
      flags[i] = true;
      best = w[i];
    }
  }
  return flags;
}

}  // namespace

ValueSet boundary_extrema(std::span<const int> w, Extremum kind) {
  ValueSet out;
  auto flags = extremum_flags(w, kind);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (flags[i]) out.insert(w[i]);
  return out;
}

PositionSet extrema_positions(std::span<const int> w, Extremum kind) {
  PositionSet out;
  auto flags = extremum_flags(w, kind);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (flags[i]) out.insert(static_cast<int>(i) + 1);
  return out;
}

int count_extrema(std::span<const int> w, Extremum kind) {
  auto flags = extremum_flags(w, kind);
  return static_cast<int>(std::count(flags.begin(), flags.end(), true));
}

PositionSet descent_set(std::span<const int> w) {
  PositionSet out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.insert(static_cast<int>(i) + 1);
  return out;
}

PositionSet ascent_set(std::span<const int> w) {
  PositionSet out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) out.insert(static_cast<int>(i) + 1);
  return out;
}

int des(std::span<const int> w) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) count += w[i] > w[i + 1];
  return count;
}

int asc(std::span<const int> w) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) count += w[i] < w[i + 1];
  return count;
}

int ides(const Permutation& p) {
  // i is an inverse descent iff i+1 appears to the left of i.
  std::vector<int> pos(p.word().size() + 1);
  for (std::size_t i = 0; i < p.word().size(); ++i) pos[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  int count = 0;
  for (std::size_t v = 1; v + 1 < pos.size(); ++v) count += pos[v] > pos[v + 1];
  return count;
}

ValueSet wnm_set(const Permutation& p) {
  const auto n = p.word().size();
  std::vector<int> prefix_max(n, 0), suffix_min(n, static_cast<int>(n) + 1);
  for (std::size_t i = 1; i < n; ++i) prefix_max[i] = std::max(prefix_max[i - 1], p[i - 1]);
  for (std::size_t i = n - 1; i-- > 0;) suffix_min[i] = std::min(suffix_min[i + 1], p[i + 1]);
  ValueSet out;
  for (std::size_t i = 0; i < n; ++i) {
    const bool weak_excedance = p[i] >= static_cast<int>(i) + 1;
    const bool mid_point = prefix_max[i] > p[i] && suffix_min[i] < p[i];
    if (weak_excedance && !mid_point) out.insert(p[i]);
  }
  return out;
}

int wnm(const Permutation& p) { return static_cast<int>(wnm_set(p).size()); }

ValueSet rlm_set(const Permutation& p) {
  const auto one = static_cast<std::size_t>(p.position_of(1) - 1);
  return boundary_extrema(p.values().first(one), Extremum::rlmax);
}

int rlm(const Permutation& p) {
  const auto one = static_cast<std::size_t>(p.position_of(1) - 1);
  return rlmax(p.values().first(one));
}

StatReport stat_report(const Permutation& p) {
  StatReport r;
  r.lrmax_set = boundary_extrema(p.values(), Extremum::lrmax);
  r.rlmax_set = boundary_extrema(p.values(), Extremum::rlmax);
  r.lrmin_set = boundary_extrema(p.values(), Extremum::lrmin);
  r.rlmin_set = boundary_extrema(p.values(), Extremum::rlmin);
  r.des_set = descent_set(p.values());
  r.asc_set = ascent_set(p.values());
  r.des = static_cast<int>(r.des_set.size());
  r.asc = static_cast<int>(r.asc_set.size());
  r.ides = des(inverse(p).values());
  r.wnm_set = wnm_set(p);
  r.rlm_set = rlm_set(p);
  r.wnm = static_cast<int>(r.wnm_set.size());
  r.rlm = static_cast<int>(r.rlm_set.size());
  return r;
}

// ---------------------------------------------------------------------------

VincularPattern::VincularPattern(Permutation pattern, std::set<int> adjacency)
    : pattern_(std::move(pattern)), adjacency_(std::move(adjacency)) {
  for (int i : adjacency_) {
    if (i < 1 || i >= pattern_.size()) {
      throw InputError("adjacency index " + std::to_string(i) + " outside 1.." +
                       std::to_string(pattern_.size() - 1));
    }
  }
}

namespace {

int count_from(const Permutation& host, const VincularPattern& pat, std::vector<std::size_t>& chosen) {
  const std::size_t k = chosen.size();
  const auto& pattern = pat.pattern();
  if (k == pattern.word().size()) return 1;
  const std::size_t n = host.word().size();
  std::size_t lo = k == 0 ? 0 : chosen.back() + 1;
  std::size_t hi = n - (pattern.word().size() - k);  // leave room for the rest
  if (k > 0 && pat.adjacent_after(static_cast<int>(k))) hi = std::min(hi, lo);
  int total = 0;
  for (std::size_t i = lo; i <= hi && i < n; ++i) {
    bool ok = true;
    for (std::size_t s = 0; s < k && ok; ++s) {
      ok = (host[i] > host[chosen[s]]) == (pattern[k] > pattern[s]);
    }
    if (!ok) continue;
    chosen.push_back(i);
    total += count_from(host, pat, chosen);
    chosen.pop_back();
  }
  return total;
}

}  // namespace

int count_vincular(const Permutation& p, const VincularPattern& pat) {
  if (pat.pattern().size() > p.size()) return 0;
  std::vector<std::size_t> chosen;
  chosen.reserve(pat.pattern().word().size());
  return count_from(p, pat, chosen);
}

const VincularPattern& pattern_321() {
  static const VincularPattern pat(Permutation({3, 2, 1}), {});
  return pat;
}

const VincularPattern& pattern_321_consecutive() {
  static const VincularPattern pat(Permutation({3, 2, 1}), {1, 2});
  return pat;
}

const VincularPattern& pattern_312_vincular() {
  static const VincularPattern pat(Permutation({3, 1, 2}), {1});
  return pat;
}

int count_consecutive_321(std::span<const int> w) {
  int count = 0;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) count += w[i] > w[i + 1] && w[i + 1] > w[i + 2];
  return count;
}

int u321(const Permutation& p) { return count_consecutive_321(p.values()); }

int u312(const Permutation& p) { return count_vincular(p, pattern_312_vincular()); }

bool avoids_321(const Permutation& p) {
  // Avoids 321 iff every letter is an LR-maximum or an RL-minimum; checked
  // here directly as "no letter with a larger letter before and a smaller after".
  const auto n = p.word().size();
  int best = 0;
  std::vector<int> suffix_min(n + 1, static_cast<int>(n) + 1);
  for (std::size_t i = n; i-- > 0;) suffix_min[i] = std::min(suffix_min[i + 1], p[i]);
  for (std::size_t i = 0; i < n; ++i) {
    if (best > p[i] && suffix_min[i + 1] < p[i]) return false;
    best = std::max(best, p[i]);
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  if (n >= 1 && n <= kMaxEnumerationN) out.reserve(static_cast<std::size_t>(factorial(n)));
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<Permutation> all_permutations_avoiding_321(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (avoids_321(p)) out.push_back(p);
  });
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// ---------------------------------------------------------------------------

Permutation parse_permutation(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      current.push_back(c);
    } else {
      throw InputError(std::string("unexpected character '") + c + "' in permutation");
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  if (tokens.empty()) throw InputError("empty permutation");

  std::vector<int> values;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    if (tokens[0].size() > 9) throw InputError("digit-string shorthand only allowed for n <= 9");
    for (char c : tokens[0]) values.push_back(c - '0');
  } else {
    for (const auto& t : tokens) {
      if (t.size() > 6) throw InputError("value '" + t + "' too large");
      values.push_back(std::stoi(t));
    }
  }
  return Permutation(std::move(values));
}

std::string format_word(std::span<const int> w, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(w[i]);
  }
  return out;
}

std::string format_permutation(const Permutation& p, std::string_view sep) { return format_word(p.values(), sep); }

std::string format_set(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace permstat
