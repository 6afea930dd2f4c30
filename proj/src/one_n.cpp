#include "permstat/one_n.hpp"

#include <algorithm>

namespace permstat {

namespace {

using Iter = Word::const_iterator;

void append_reversed(Word& out, Iter first, Iter last) {
  out.insert(out.end(), std::make_reverse_iterator(last), std::make_reverse_iterator(first));
}

void append(Word& out, Iter first, Iter last) { out.insert(out.end(), first, last); }

}  // namespace

Permutation rho(const Permutation& p) {
  const int n = p.size();
  if (n < 2 || p.at(n) != n) throw InputError("rho expects a permutation of length >= 2 ending in n");
  const Word& w = p.word();
  const auto one = std::find(w.begin(), w.end(), 1);
  const auto last = w.end() - 1;  // the trailing n

  // b begins at max of the prefix before 1; a empty when that prefix is.
  const auto b_begin = one == w.begin() ? w.begin() : std::max_element(w.begin(), one);
  const int threshold = one == w.begin() ? 0 : *b_begin;
  const auto d_begin = std::find_if(one + 1, last, [&](int v) { return v > threshold; });

  Word out;
  out.reserve(w.size());
  append_reversed(out, b_begin, one);  // b^r
  append(out, one + 1, d_begin);       // c
  out.push_back(n);
  append_reversed(out, d_begin, last);     // d^r
  append_reversed(out, w.begin(), b_begin);  // a^r
  out.push_back(1);
  return Permutation(std::move(out));
}

Permutation rho_inv(const Permutation& t) {
  const int n = t.size();
  if (n < 2 || t.at(n) != 1) throw InputError("rho_inv expects a permutation of length >= 2 ending in 1");
  const Word& w = t.word();
  const auto top = std::find(w.begin(), w.end(), n);
  const auto last = w.end() - 1;  // the trailing 1

  // e ends at (and includes) max of the prefix before n.
  const auto e_end = top == w.begin() ? w.begin() : std::max_element(w.begin(), top) + 1;
  const int threshold = top == w.begin() ? 0 : *(e_end - 1);
  // g ends at the rightmost letter after n exceeding the threshold.
  auto g_end = top + 1;
  for (auto it = top + 1; it != last; ++it)
    if (*it > threshold) g_end = it + 1;

  Word out;
  out.reserve(w.size());
  append_reversed(out, g_end, last);      // h^r
  append_reversed(out, w.begin(), e_end);  // e^r
  out.push_back(1);
  append(out, e_end, top);                // f
  append_reversed(out, top + 1, g_end);   // g^r
  out.push_back(n);
  return Permutation(std::move(out));
}

Permutation phi_swap(const Permutation& p) {
  const int n = p.size();
  if (n < 2) throw InputError("phi_swap needs n >= 2");
  const int pos_one = p.position_of(1);
  const int pos_n = p.position_of(n);
  const int cut = std::max(pos_one, pos_n);  // prefix ends at the later of 1, n

  const auto prefix = p.values().first(static_cast<std::size_t>(cut));
  const auto st = standardize(prefix);
  const Permutation image = pos_one < pos_n ? rho(st.pattern) : rho_inv(st.pattern);

  Word out = unstandardize(image, st.support);
  out.insert(out.end(), p.word().begin() + cut, p.word().end());
  return Permutation(std::move(out));
}

}  // namespace permstat
