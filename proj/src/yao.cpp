#include "relaxbound/yao.hpp"

#include <cmath>
#include <numeric>
#include <thread>

namespace relaxbound {

Permutation sample_permutation(int n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("sample_permutation: n must be at least 2");
  Permutation pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  rng.shuffle(std::span<Vertex>(pi).subspan(1));
  return pi;
}

PhaseTimes phase_times(std::span<const Step> transcript, std::span<const Vertex> pi) {
  const int n = static_cast<int>(pi.size());
  const int phases = (n - 1) / 2;
  PhaseTimes out;
  out.t.assign(static_cast<std::size_t>(phases) + 1, 0);
  out.dt.assign(static_cast<std::size_t>(phases) + 1, 0);

  int matched = 0;  // path edges (x_0,x_1)..(x_{matched-1},x_matched) seen in order
  const int needed = 2 * phases;
  for (const Step& step : transcript) {
    if (matched == needed) break;
    if (!step.op.accesses_edge()) continue;
    if (step.op.u == pi[matched] && step.op.v == pi[matched + 1]) {
      ++matched;
      if (matched % 2 == 0) out.t[matched / 2] = step.t;
    }
  }
  if (matched < needed) {
    throw IncompleteGame("path edge (x_" + std::to_string(matched) + ", x_" + std::to_string(matched + 1) +
                         ") never accessed in order");
  }
  for (int k = 1; k <= phases; ++k) out.dt[k] = out.t[k] - out.t[k - 1];
  return out;
}

std::int64_t expected_phase_bound(int n, int k) {
  const std::int64_t a = n - 2 * k + 1;
  return a * (a + 1) / 2;
}

std::int64_t expected_lower_bound(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("expected_lower_bound: n must be odd");
  std::int64_t total = 0;
  for (int k = 1; k <= (n - 1) / 2; ++k) total += expected_phase_bound(n, k);
  return total;
}

ExperimentStats experiment(StrategyKind kind, int n, int samples, std::uint64_t seed, int jobs) {
  if (samples < 1) throw std::invalid_argument("experiment: samples must be at least 1");
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("experiment: n must be odd and >= 3");
  ExperimentStats stats;
  stats.strategy = kind;
  stats.n = n;
  stats.samples = samples;
  stats.seed = seed;
  stats.bound = expected_lower_bound(n);
  stats.bound_applies = is_edge_query_only(kind);
  stats.records.resize(static_cast<std::size_t>(samples));

  const auto run_sample = [&](int i) {
    SampleRecord& rec = stats.records[static_cast<std::size_t>(i)];
    rec.sample = i;
    rec.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    Rng rng(rec.seed);
    const Permutation pi = sample_permutation(n, rng);
    const WeightAssignment l = hard_rand(pi);
    std::unique_ptr<Strategy> strategy = make_strategy(kind, n, rng.next());
    const RunResult result = run(*strategy, l);
    rec.reduced_cost = result.reduced_cost;
    rec.ops = static_cast<std::int64_t>(result.transcript.size());
    rec.correct = result.correct;
    rec.status = result.status;
    try {
      rec.t = phase_times(result.transcript, pi).t;
    } catch (const IncompleteGame&) {
      rec.t.clear();
    }
  };

  const int workers = std::max(1, std::min(jobs, samples));
  if (workers == 1) {
    for (int i = 0; i < samples; ++i) run_sample(i);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < samples; i += workers) run_sample(i);
      });
    }
  }

  const int phases = (n - 1) / 2;
  double sum = 0.0;
  double sum_sq = 0.0;
  int settled = 0;
  std::vector<double> dt_sum(static_cast<std::size_t>(phases) + 1, 0.0);
  int complete = 0;
  for (const SampleRecord& rec : stats.records) {
    if (rec.reduced_cost) {
      const auto cost = static_cast<double>(*rec.reduced_cost);
      sum += cost;
      sum_sq += cost * cost;
      ++settled;
    }
    if (!rec.t.empty()) {
      ++complete;
      for (int k = 1; k <= phases; ++k) dt_sum[k] += static_cast<double>(rec.t[k] - rec.t[k - 1]);
    }
  }
  stats.unsettled = samples - settled;
  if (settled > 0) {
    stats.mean_reduced_cost = sum / settled;
    stats.stddev_reduced_cost = std::sqrt(std::max(0.0, sum_sq / settled - stats.mean_reduced_cost * stats.mean_reduced_cost));
  }
  stats.mean_dt.assign(static_cast<std::size_t>(phases) + 1, 0.0);
  if (complete > 0) {
    for (int k = 1; k <= phases; ++k) stats.mean_dt[k] = dt_sum[k] / complete;
  }
  return stats;
}

}  // namespace relaxbound
