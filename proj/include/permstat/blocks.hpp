#pragma once

/// \file
/// Block decomposition of a permutation: a bar after every RL-minimum and a
/// bar before every LR-maximum not already preceded by one. Each block is
/// classified by which global extrema it holds:
///
///   T  both an LR-maximum and an RL-minimum
///   A  an LR-maximum only
///   I  an RL-minimum only
///   N  neither

#include <string>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

enum class BlockClass : char { N = 'N', T = 'T', A = 'A', I = 'I' };

struct Block {
  Word letters;
  BlockClass kind;

  int max() const;
  int min() const;
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;

  Word concatenated() const;
  int count(BlockClass kind) const;
};

BlockDecomposition decompose(const Permutation& p);

/// L: rotate so the minimum letter comes last.
Word rotate_min(std::span<const int> w);
/// R: rotate so the maximum letter comes first.
Word rotate_max(std::span<const int> w);

/// Keeps T and N blocks in place, turns each I block into R(I) and each A
/// block into L(A), and re-inserts them so that block maxima (resp. minima)
/// of the rotated blocks and the T blocks increase. Within a gap between T
/// blocks the order is L(A) blocks, the N block, R(I) blocks.
Permutation varphi(const Permutation& p);

/// Keeps the fixed prefix 1..l and the fixed suffix r..n and replaces the
/// middle by its reverse-complement. Defined on all of S_n.
Permutation reverse_complement_core(const Permutation& p);

/// reverse_complement_core restricted to 321-avoiders, where it is an
/// involution. Throws InputError("not 321-avoiding: ...") otherwise.
Permutation chi321(const Permutation& p);

/// Two lines: blocks joined by " | ", then class letters under each block.
std::string format_decomposition(const BlockDecomposition& d);

}  // namespace permstat
