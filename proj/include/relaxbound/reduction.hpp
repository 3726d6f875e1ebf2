#pragma once

#include <cstdint>
#include <memory>

#include "relaxbound/adversary.hpp"
#include "relaxbound/core.hpp"
#include "relaxbound/machine.hpp"

namespace relaxbound {

/// Mask l' = l + c * delta(phi) with phi a Golomb-ruler potential.
struct MaskParams {
  Potential phi;
  Weight c = 0;
};

/// c = 2 * lmax * n + 1.
Weight mask_constant(Weight lmax, int n);

/// Golomb potential on n vertices with c = mask_constant(lmax, n).
/// Throws if the induced edge weights are not pairwise distinct.
MaskParams make_mask_params(int n, Weight lmax);

/// Strategy that runs `inner` while answering its D-queries from phi
/// (phi[u] < phi[v]) and its weight queries from delta(phi), never passing
/// them to the environment. Edge queries and relaxations pass through.
std::unique_ptr<Strategy> wrap(std::unique_ptr<Strategy> inner, MaskParams params);

/// Exhaustive check over all ordered pairs of distinct edges e, f:
/// l'(e) < l'(f) iff delta(phi)(e) < delta(phi)(f).
bool verify_p1(const WeightAssignment& l, const MaskParams& params);

/// For simple paths P_x (u to x) and P_y (u to y), x != y:
/// l'(P_x) < l'(P_y) iff phi[x] < phi[y]. Exhaustive for n <= 7 (via the
/// extreme path lengths per endpoint, which decides every pair); otherwise
/// `path_budget` random pairs drawn from `seed`.
bool verify_p2(const WeightAssignment& l, const MaskParams& params, std::int64_t path_budget,
               std::uint64_t seed = 0);

/// Runs a fresh edge-query-only strategy on l and on l + delta(phi); true iff
/// the transcripts agree step for step and D'[v] = D[v] + phi[v] after
/// every step.
bool check_potential_oblivious(const StrategyFactory& make, const WeightAssignment& l, const Potential& phi);

/// Wraps `a` with the Golomb potential and c for the hard family's lmax = 5n
/// and duels the result against the adversary with L = 5n.
DuelResult masked_duel(std::unique_ptr<Strategy> a, int n, std::optional<std::int64_t> budget = std::nullopt);

}  // namespace relaxbound
