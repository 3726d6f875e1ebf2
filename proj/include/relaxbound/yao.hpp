#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "relaxbound/core.hpp"
#include "relaxbound/machine.hpp"
#include "relaxbound/rng.hpp"
#include "relaxbound/strategies.hpp"

namespace relaxbound {

class IncompleteGame : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform permutation of [0, n) with pi[0] = s.
Permutation sample_permutation(int n, Rng& rng);

/// t[k] (k = 0..(n-1)/2, t[0] = 0) is the first step by which the path edges
/// (x_0,x_1), ..., (x_{2k-1},x_{2k}) have been accessed in that order;
/// dt[k] = t[k] - t[k-1] (dt[0] = 0).
struct PhaseTimes {
  std::vector<std::int64_t> t;
  std::vector<std::int64_t> dt;
};

/// Throws IncompleteGame if some path edge is never reached in order.
PhaseTimes phase_times(std::span<const Step> transcript, std::span<const Vertex> pi);

/// Sum over k of (n-2k+1)(n-2k+2)/2; n odd.
std::int64_t expected_lower_bound(int n);

/// (n-2k+1)(n-2k+2)/2, the expected-length bound for phase k.
std::int64_t expected_phase_bound(int n, int k);

struct SampleRecord {
  int sample = 0;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> reduced_cost;
  std::int64_t ops = 0;
  bool correct = false;
  RunStatus status = RunStatus::Halted;
  /// Empty if the path edges were never all reached in order.
  std::vector<std::int64_t> t;
};

struct ExperimentStats {
  StrategyKind strategy = StrategyKind::GuardedBF;
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<SampleRecord> records;
  double mean_reduced_cost = 0.0;
  double stddev_reduced_cost = 0.0;
  /// Samples whose D-vector never became correct within the budget.
  int unsettled = 0;
  /// mean dt[k], index k = 1..(n-1)/2 (entry 0 unused), over samples with a
  /// complete phase record.
  std::vector<double> mean_dt;
  std::int64_t bound = 0;
  /// False for strategies with D-queries: their runs are report-only.
  bool bound_applies = true;
};

/// Draws `samples` permutations, builds hard_rand(pi, 5n^2) for each and runs
/// the strategy. Sample i uses permutation and strategy seeds derived from
/// (seed, i), so results do not depend on `jobs`.
ExperimentStats experiment(StrategyKind kind, int n, int samples, std::uint64_t seed, int jobs = 1);

}  // namespace relaxbound
