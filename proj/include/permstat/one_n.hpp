#pragma once

/// \file
/// The bijection between permutations ending in n and permutations ending
/// in 1, and the involution built from it that exchanges rlm with lrmax - 1.

#include "permstat/permutation.hpp"

namespace permstat {

/// p(n) = n, n >= 2. Writing p = a b 1 c d n with b starting at max(prefix
/// before 1) and d starting at the first later letter exceeding it, returns
/// b^r c n d^r a^r 1.
Permutation rho(const Permutation& p);

/// t(n) = 1, n >= 2. Inverse of rho: with t = e f n g h 1 (e ends at the
/// maximum before n, g ends at the rightmost later letter exceeding it),
/// returns h^r e^r 1 f g^r n.
Permutation rho_inv(const Permutation& t);

/// Involution on S_n, n >= 2, with rlm(p) = lrmax(out) - 1 and
/// lrmax(p) - 1 = rlm(out). Applies rho (1 before n) or rho_inv (n before 1)
/// to the standardized prefix ending at the later of the two.
Permutation phi_swap(const Permutation& p);

}  // namespace permstat
