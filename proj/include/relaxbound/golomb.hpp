#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "relaxbound/core.hpp"

namespace relaxbound {

/// Strictly increasing marks starting at 0.
using Ruler = std::vector<Weight>;

/// Smallest prime >= n (n >= 2), found with a sieve over [0, 2n].
std::int64_t least_prime_at_least(std::int64_t n);

/// Erdos-Turan Sidon set {2p*i + (i^2 mod p) : 0 <= i < n}, p the least
/// prime >= n. Max mark is below 2p^2 < 8n^2.
Ruler erdos_turan_ruler(int n);

/// True iff all ordered differences of distinct marks are pairwise distinct.
bool is_golomb(std::span<const Weight> marks);

/// Potential phi[v] = erdos_turan_ruler(n)[v]; all n(n-1) induced edge
/// weights phi[v] - phi[u] are distinct.
Potential golomb_potential(int n);

}  // namespace relaxbound
