#include "permstat/invseq.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace permstat {

InversionSequence::InversionSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("empty inversion sequence");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || entries_[i] > static_cast<int>(i)) {
      throw InputError("entry " + std::to_string(entries_[i]) + " at position " + std::to_string(i + 1) +
                       " outside 0.." + std::to_string(i));
    }
  }
}

InvSeqStats invseq_stats(const InversionSequence& s) {
  InvSeqStats out;
  const auto& e = s.entries();
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int pos = static_cast<int>(i) + 1;
    if (e[i] == 0) out.zero_set.insert(pos);
    if (e[i] == static_cast<int>(i)) out.max_set.insert(pos);
    if (i + 1 < n && e[i] < e[i + 1]) out.asc_set.insert(pos);
    bool repeated_later = false;
    bool below_all_later = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      repeated_later = repeated_later || e[j] == e[i];
      below_all_later = below_all_later && e[i] < e[j];
    }
    if (pos >= 2 && e[i] != 0 && !repeated_later) out.dist_set.insert(pos);
    if (below_all_later) out.rlmin_strict_set.insert(pos);
  }
  out.zero = static_cast<int>(out.zero_set.size());
  out.max_stat = static_cast<int>(out.max_set.size());
  out.dist = static_cast<int>(out.dist_set.size());
  out.asc = static_cast<int>(out.asc_set.size());
  out.rlmin_strict = static_cast<int>(out.rlmin_strict_set.size());
  return out;
}

InversionSequence gamma_insert(const InversionSequence& s) {
  std::vector<int> out;
  out.reserve(s.entries().size());
  for (int e : s.entries()) out.insert(out.begin() + e, e);
  return InversionSequence(std::move(out));
}

// ---------------------------------------------------------------------------

Slice initial_slice(int n) { return {LabeledInterval{0, n, 0}}; }

int slice_step(Slice& slice, int value) {
  auto it = std::find_if(slice.begin(), slice.end(), [&](const LabeledInterval& iv) { return iv.contains(value); });
  if (it == slice.end()) throw std::logic_error("value " + std::to_string(value) + " not in any interval");
  const auto v = static_cast<std::size_t>(it - slice.begin());
  const LabeledInterval hit = *it;
  const int emitted = hit.label;

  // Pieces replacing I_v: H above the value, J below it.
  std::vector<LabeledInterval> pieces;
  const bool has_h = value < hit.hi;
  const bool has_j = hit.lo < value;
  if (has_h) pieces.push_back({value + 1, hit.hi, 0});
  if (has_j) pieces.push_back({hit.lo, value - 1, 0});

  // Labels for positions v.. are drawn from l_v..l_k, l_k + 1: a missing H
  // drops l_v, a missing J drops l_k.
  std::vector<int> pool;
  for (std::size_t i = v; i < slice.size(); ++i) pool.push_back(slice[i].label);
  const int top = slice.back().label + 1;
  if (!has_j) pool.pop_back();
  if (!has_h && !pool.empty()) pool.erase(pool.begin());
  pool.push_back(top);

  Slice next(slice.begin(), slice.begin() + static_cast<long>(v));
  next.insert(next.end(), pieces.begin(), pieces.end());
  next.insert(next.end(), slice.begin() + static_cast<long>(v) + 1, slice.end());
  if (next.size() - v != pool.size()) throw std::logic_error("slice label bookkeeping out of step");
  for (std::size_t i = v; i < next.size(); ++i) next[i].label = pool[i - v];
  slice = std::move(next);
  return emitted;
}

bool slice_well_formed(const Slice& slice, int step) {
  for (std::size_t i = 0; i < slice.size(); ++i) {
    const auto& iv = slice[i];
    if (iv.lo > iv.hi || iv.label < 0 || iv.label > step) return false;
    if (i > 0 && (slice[i - 1].lo <= iv.hi || slice[i - 1].label >= iv.label)) return false;
  }
  return true;
}

std::vector<Slice> code_b_trace(const Permutation& p) {
  std::vector<Slice> trace{initial_slice(p.size())};
  Slice current = trace.front();
  for (int v : p) {
    slice_step(current, v);
    trace.push_back(current);
  }
  return trace;
}

InversionSequence code_b(const Permutation& p) {
  Slice slice = initial_slice(p.size());
  std::vector<int> out;
  out.reserve(p.word().size());
  for (int v : p) out.push_back(slice_step(slice, v));
  return InversionSequence(std::move(out));
}

Permutation code_b_inv(const InversionSequence& s) {
  const std::size_t n = s.entries().size();
  std::vector<int> chosen;
  chosen.reserve(n);

  std::function<bool(const Slice&)> search = [&](const Slice& slice) -> bool {
    const std::size_t i = chosen.size();
    if (i == n) return true;
    auto it = std::find_if(slice.begin(), slice.end(), [&](const LabeledInterval& iv) { return iv.label == s[i]; });
    if (it == slice.end()) return false;
    for (int value = std::max(it->lo, 1); value <= it->hi; ++value) {
      Slice next = slice;
      slice_step(next, value);
      if (i + 1 < n &&
          std::none_of(next.begin(), next.end(), [&](const LabeledInterval& iv) { return iv.label == s[i + 1]; })) {
        continue;
      }
      chosen.push_back(value);
      if (search(next)) return true;
      chosen.pop_back();
    }
    return false;
  };

  if (!search(initial_slice(static_cast<int>(n)))) {
    throw std::logic_error("no permutation has code " + format_inversion_sequence(s));
  }
  return Permutation(std::move(chosen));
}

std::string format_slice(const Slice& slice) {
  std::string out;
  for (const auto& iv : slice) {
    out += "([" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]," + std::to_string(iv.label) + ")";
  }
  return out;
}

// ---------------------------------------------------------------------------

AlphaTrace alpha_trace(const Permutation& p) {
  const Permutation c = complement(p);
  const Permutation i = inverse(c);
  const InversionSequence b = code_b(i);
  const InversionSequence g = gamma_insert(b);
  const Permutation d = code_b_inv(g);
  const Permutation ii = inverse(d);
  return AlphaTrace{p, c, i, b, g, d, ii, complement(ii)};
}

Permutation alpha(const Permutation& p) { return alpha_trace(p).result; }

Permutation beta(const Permutation& p) {
  const int n = p.size();
  const auto one = static_cast<std::size_t>(p.position_of(1) - 1);
  const auto x = p.values().first(one);
  const auto y = p.values().subspan(one + 1);

  auto mirrored = [n](const std::vector<int>& support) {
    std::vector<int> out(support);
    for (int& v : out) v = n + 1 - v;
    return out;
  };

  Word out;
  out.reserve(static_cast<std::size_t>(n));
  if (!y.empty()) {
    const auto sy = standardize(y);
    const Word y_prime = unstandardize(reverse_complement(sy.pattern), mirrored(sy.support));
    out.insert(out.end(), y_prime.begin(), y_prime.end());
  }
  out.push_back(n);
  if (!x.empty()) {
    const auto sx = standardize(x);
    const Word x_prime = unstandardize(alpha(sx.pattern), mirrored(sx.support));
    out.insert(out.end(), x_prime.begin(), x_prime.end());
  }
  return Permutation(std::move(out));
}

// ---------------------------------------------------------------------------

std::vector<InversionSequence> all_inversion_sequences(int n) {
  if (n < 1 || n > kMaxInvSeqN) {
    throw InputError("inversion sequence length " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxInvSeqN) + "]");
  }
  std::vector<InversionSequence> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(e);
    int i = n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == i) e[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }
  return out;
}

InversionSequence parse_inversion_sequence(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      current.push_back(c);
    } else {
      throw InputError(std::string("unexpected character '") + c + "' in inversion sequence");
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  if (tokens.empty()) throw InputError("empty inversion sequence");

  std::vector<int> entries;
  if (tokens.size() == 1) {
    for (char c : tokens[0]) entries.push_back(c - '0');
  } else {
    for (const auto& t : tokens) {
      if (t.size() > 6) throw InputError("entry '" + t + "' too large");
      entries.push_back(std::stoi(t));
    }
  }
  return InversionSequence(std::move(entries));
}

std::string format_inversion_sequence(const InversionSequence& s) {
  if (s.size() <= 10) {
    std::string out;
    for (int e : s.entries()) out += std::to_string(e);
    return out;
  }
  return format_word(s.entries(), ",");
}

}  // namespace permstat
