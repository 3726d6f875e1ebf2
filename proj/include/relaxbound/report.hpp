#pragma once

#include <cstdint>
#include <string>

#include "relaxbound/adversary.hpp"
#include "relaxbound/machine.hpp"
#include "relaxbound/reduction.hpp"
#include "relaxbound/yao.hpp"

namespace relaxbound {

// All emitters are deterministic: fixed key order, fixed number formatting.

/// {n, L, strategy, seed, outcome, total_ops, per_phase_ops[], pi[],
///  lower_bound, consistent, correct}
std::string duel_report(const DuelResult& result, std::uint64_t seed);

/// {strategy, seed, n, ops, reduced_cost, correct, status}
std::string bench_report(const RunResult& result, const std::string& strategy, std::uint64_t seed, int n);

/// Header, one row per sample, then a "mean" row carrying the means and the
/// bound:
/// sample,strategy,n,seed,reduced_cost,t_1..t_m,bound
std::string yao_csv(const ExperimentStats& stats);

/// {phi[], c}
std::string mask_sidecar(const MaskParams& params);

/// Closed forms for n: deterministic and randomized lower bounds, plus the
/// Bellman-Ford and Yen sequence lengths.
std::string formulas_report(int n);

}  // namespace relaxbound
