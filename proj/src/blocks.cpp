#include "permstat/blocks.hpp"

#include <algorithm>
#include <stdexcept>

namespace permstat {

int Block::max() const { return *std::max_element(letters.begin(), letters.end()); }
int Block::min() const { return *std::min_element(letters.begin(), letters.end()); }

Word BlockDecomposition::concatenated() const {
  Word out;
  for (const auto& b : blocks) out.insert(out.end(), b.letters.begin(), b.letters.end());
  return out;
}

int BlockDecomposition::count(BlockClass kind) const {
  return static_cast<int>(std::count_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.kind == kind; }));
}

BlockDecomposition decompose(const Permutation& p) {
  const auto n = static_cast<std::size_t>(p.size());
  const auto lr_max = boundary_extrema(p.values(), Extremum::lrmax);
  const auto rl_min = boundary_extrema(p.values(), Extremum::rlmin);

  // bar[g] for gap g in 0..n, where gap g sits before position g+1.
  std::vector<bool> bar(n + 1, false);
  bar[0] = bar[n] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (rl_min.contains(p[i])) bar[i + 1] = true;
    if (lr_max.contains(p[i])) bar[i] = true;
  }

  BlockDecomposition d;
  std::size_t start = 0;
  for (std::size_t g = 1; g <= n; ++g) {
    if (!bar[g]) continue;
    Block b{Word(p.word().begin() + static_cast<long>(start), p.word().begin() + static_cast<long>(g)), BlockClass::N};
    const bool has_max = std::any_of(b.letters.begin(), b.letters.end(), [&](int v) { return lr_max.contains(v); });
    const bool has_min = std::any_of(b.letters.begin(), b.letters.end(), [&](int v) { return rl_min.contains(v); });
    b.kind = has_max ? (has_min ? BlockClass::T : BlockClass::A) : (has_min ? BlockClass::I : BlockClass::N);
    d.blocks.push_back(std::move(b));
    start = g;
  }
  return d;
}

Word rotate_min(std::span<const int> w) {
  if (w.empty()) throw InputError("empty word");
  const auto i = static_cast<std::size_t>(std::min_element(w.begin(), w.end()) - w.begin());
  Word out(w.begin() + static_cast<long>(i) + 1, w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(i) + 1);
  return out;
}

Word rotate_max(std::span<const int> w) {
  if (w.empty()) throw InputError("empty word");
  const auto j = static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
  Word out(w.begin() + static_cast<long>(j), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(j));
  return out;
}

Permutation varphi(const Permutation& p) {
  const auto d = decompose(p);

  std::vector<const Block*> t_blocks;
  for (const auto& b : d.blocks)
    if (b.kind == BlockClass::T) t_blocks.push_back(&b);
  const std::size_t gaps = t_blocks.size() + 1;

  // Gap g lies between T block g-1 and T block g (0 before the first T,
  // t_blocks.size() after the last).
  struct Gap {
    std::vector<Word> rotated_a;  // L(A), become I blocks
    std::vector<const Block*> n_blocks;  // at most one
    std::vector<Word> rotated_i;  // R(I), become A blocks
  };
  std::vector<Gap> layout(gaps);

  std::size_t t_seen = 0;
  for (const auto& b : d.blocks) {
    switch (b.kind) {
      case BlockClass::T: ++t_seen; break;
      case BlockClass::N: layout[t_seen].n_blocks.push_back(&b); break;
      case BlockClass::I: {
        Word r = rotate_max(b.letters);
        const auto g = static_cast<std::size_t>(
            std::count_if(t_blocks.begin(), t_blocks.end(), [&](const Block* t) { return t->max() < r.front(); }));
        layout[g].rotated_i.push_back(std::move(r));
        break;
      }
      case BlockClass::A: {
        Word l = rotate_min(b.letters);
        const auto g = static_cast<std::size_t>(
            std::count_if(t_blocks.begin(), t_blocks.end(), [&](const Block* t) { return t->min() < l.back(); }));
        layout[g].rotated_a.push_back(std::move(l));
        break;
      }
    }
  }

  Word out;
  out.reserve(static_cast<std::size_t>(p.size()));
  auto append = [&](const Word& w) { out.insert(out.end(), w.begin(), w.end()); };
  for (std::size_t g = 0; g < gaps; ++g) {
    auto& gap = layout[g];
    std::sort(gap.rotated_a.begin(), gap.rotated_a.end(), [](const Word& x, const Word& y) { return x.back() < y.back(); });
    std::sort(gap.rotated_i.begin(), gap.rotated_i.end(), [](const Word& x, const Word& y) { return x.front() < y.front(); });
    for (const auto& w : gap.rotated_a) append(w);
    for (const Block* b : gap.n_blocks) append(b->letters);
    for (const auto& w : gap.rotated_i) append(w);
    if (g < t_blocks.size()) append(t_blocks[g]->letters);
  }
  return Permutation(std::move(out));
}

Permutation reverse_complement_core(const Permutation& p) {
  const int n = p.size();
  int l = 0;
  while (l < n && p.at(l + 1) == l + 1) ++l;
  if (l == n) return p;
  int r = n + 1;
  while (r > 1 && p.at(r - 1) == r - 1) --r;

  // Middle positions l+1..r-1 hold exactly the values l+1..r-1.
  Word middle;
  for (int i = r - 1; i > l; --i) middle.push_back(n + 1 - p.at(i));
  std::vector<int> support;
  for (int v = l + 1; v < r; ++v) support.push_back(v);
  const Word h = unstandardize(standardize(middle).pattern, support);

  Word out;
  for (int v = 1; v <= l; ++v) out.push_back(v);
  out.insert(out.end(), h.begin(), h.end());
  for (int v = r; v <= n; ++v) out.push_back(v);
  return Permutation(std::move(out));
}

Permutation chi321(const Permutation& p) {
  if (!avoids_321(p)) throw InputError("not 321-avoiding: " + format_permutation(p));
  return reverse_complement_core(p);
}

std::string format_decomposition(const BlockDecomposition& d) {
  std::string top, bottom;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const auto text = format_word(d.blocks[i].letters);
    if (i) {
      top += " | ";
      bottom += "   ";
    }
    top += text;
    std::string cls(text.size(), ' ');
    cls[0] = static_cast<char>(d.blocks[i].kind);
    bottom += cls;
  }
  while (!bottom.empty() && bottom.back() == ' ') bottom.pop_back();
  return top + "\n" + bottom + "\n";
}

}  // namespace permstat
