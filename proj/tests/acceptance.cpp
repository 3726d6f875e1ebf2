// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any failed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "relaxbound/adversary.hpp"
#include "relaxbound/golomb.hpp"
#include "relaxbound/reduction.hpp"
#include "relaxbound/report.hpp"
#include "relaxbound/strategies.hpp"
#include "relaxbound/yao.hpp"

using namespace relaxbound;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int worker_count() { return static_cast<int>(std::max(1U, std::min(8U, std::thread::hardware_concurrency()))); }

// Runs body(i) for i in [0, count) on a few threads.
void parallel_for(int count, const std::function<void(int)>& body) {
  const int workers = std::min(count, worker_count());
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) body(i);
    });
  }
}

constexpr int kDuelSizes[] = {5, 9, 15, 25, 41};
constexpr int kRandomSeeds = 20;

struct DuelCase {
  int n = 0;
  StrategyKind kind = StrategyKind::GuardedBF;
  std::uint64_t seed = 0;
};

std::vector<DuelCase> duel_cases() {
  std::vector<DuelCase> cases;
  for (int n : kDuelSizes) {
    cases.push_back({n, StrategyKind::GuardedBF, 0});
    for (int s = 0; s < kRandomSeeds; ++s) cases.push_back({n, StrategyKind::RandomFair, static_cast<std::uint64_t>(s)});
  }
  return cases;
}

// random-fair needs about n(n-1) ln n steps per phase to touch every edge it
// must; 3n^3 is too tight for it at n = 41
std::int64_t duel_budget(int n) { return std::int64_t{40} * n * n * n; }

std::string describe(const DuelCase& c) {
  return std::string(strategy_name(c.kind)) + " n=" + std::to_string(c.n) + " seed=" + std::to_string(c.seed);
}

DuelResult play(const DuelCase& c) {
  auto strategy = make_strategy(c.kind, c.n, c.seed);
  return duel(*strategy, c.n, std::nullopt, duel_budget(c.n));
}

Outcome ac1_ac2(Outcome& ac2) {
  Outcome ac1;
  const std::vector<DuelCase> cases = duel_cases();
  std::mutex lock;
  std::int64_t checks = 0;
  double duel_seconds = 0.0;
  parallel_for(static_cast<int>(cases.size()), [&](int i) {
    const DuelCase& c = cases[static_cast<std::size_t>(i)];
    const auto start = std::chrono::steady_clock::now();
    const DuelResult r = play(c);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string bad1;
    if (r.outcome != DuelOutcome::Completed) bad1 = "outcome " + std::string(to_string(r.outcome));
    else if (!r.correct) bad1 = "incorrect";
    else if (!r.consistent) bad1 = "inconsistent";
    else if (r.total_ops < det_lower_bound(c.n)) bad1 = "total_ops " + std::to_string(r.total_ops);
    for (int k = 1; bad1.empty() && k <= (c.n - 1) / 2; ++k) {
      if (r.per_phase_ops[k - 1] < phase_edge_count(c.n, k)) bad1 = "phase " + std::to_string(k) + " too short";
    }
    const InvariantReport inv = check_invariants(r, 20, derive_seed(c.seed, static_cast<std::uint64_t>(c.n)));
    std::string bad2;
    if (!inv.ok()) {
      const auto& v = inv.violations.front();
      bad2 = v.property + " at step " + std::to_string(v.step) + ": " + v.detail;
    }
    const std::scoped_lock guard(lock);
    checks += inv.checks;
    duel_seconds += elapsed;
    if (!bad1.empty()) ac1.fail(describe(c) + ": " + bad1);
    if (!bad2.empty()) ac2.fail(describe(c) + ": " + bad2);
  });
  char timing[64];
  std::snprintf(timing, sizeof timing, ", %.1f s of duel time", duel_seconds);
  if (ac1.pass) ac1.detail = std::to_string(cases.size()) + " duels, n in {5,9,15,25,41}" + timing;
  if (ac2.pass) ac2.detail = std::to_string(checks) + " replay checks, 20 completions per boundary";
  return ac1;
}

Outcome ac3() {
  Outcome out;
  Rng rng(3003);
  int count = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng.between(2, 7));
    const WeightAssignment l = oracle::random_valid_instance(n, rng);
    if (l.max_abs() > 10) out.fail("generator left [-10, 10]");
    if (oracle::has_negative_cycle(l)) out.fail("generator produced a negative cycle");
    if (true_distances(l) != oracle::brute_force_distances(l)) out.fail("mismatch on trial " + std::to_string(trial));
    ++count;
  }
  if (out.pass) out.detail = std::to_string(count) + " instances, n in [2, 7]";
  return out;
}

Outcome ac4() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 1000; ++n) {
    const Ruler r = erdos_turan_ruler(n);
    if (!is_golomb(r)) out.fail("not Golomb at n=" + std::to_string(n));
    if (r.back() >= Weight{8} * n * n) out.fail("max mark too large at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 200; ++n) {
    const WeightAssignment d = delta_potential(golomb_potential(n));
    std::vector<Weight> values;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v) values.push_back(d(u, v));
      }
    }
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
      out.fail("repeated delta(phi) value at n=" + std::to_string(n));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 5.0) out.fail("took " + std::to_string(seconds) + " s");
  if (out.pass) out.detail = "n <= 1000 rulers, n <= 200 distinct differences";
  return out;
}

// Relaxations and edge queries of a run, with their answers.
std::vector<std::pair<Operation, Answer>> edge_accesses(const Transcript& t) {
  std::vector<std::pair<Operation, Answer>> out;
  for (const Step& s : t) {
    if (s.op.accesses_edge()) out.emplace_back(s.op, s.answer);
  }
  return out;
}

Outcome ac5() {
  Outcome out;
  Rng rng(5005);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.between(2, 12));
    const WeightAssignment l = oracle::random_valid_instance(n, rng);
    const MaskParams p = make_mask_params(n, std::max<Weight>(1, l.max_abs()));
    if (!verify_p1(l, p)) out.fail("p1 fails on trial " + std::to_string(trial));
    if (!verify_p2(l, p, 10000, rng.next())) out.fail("p2 fails on trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.between(2, 10));
    const WeightAssignment l = oracle::random_instance(n, 0, 20, rng);
    const MaskParams p = make_mask_params(n, std::max<Weight>(1, l.max_abs()));
    const WeightAssignment masked = combine(l, p.phi, p.c);
    for (StrategyKind kind : {StrategyKind::DijkstraCmp, StrategyKind::GuardedBF}) {
      auto inner = make_strategy(kind, n, 0);
      const RunResult direct = run(*inner, masked);
      auto wrapped = wrap(make_strategy(kind, n, 0), p);
      const RunResult spliced = run(*wrapped, l);
      if (edge_accesses(direct.transcript) != edge_accesses(spliced.transcript)) {
        out.fail(std::string(strategy_name(kind)) + " splice mismatch on trial " + std::to_string(trial));
      }
    }
  }
  if (out.pass) out.detail = "100 (l, phi, c) triples; 200 spliced runs";
  return out;
}

Outcome ac6() {
  Outcome out;
  Rng rng(6006);
  int runs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.between(2, 10));
    const WeightAssignment l = oracle::random_valid_instance(n, rng);
    std::vector<Weight> raw(static_cast<std::size_t>(n));
    for (int v = 1; v < n; ++v) raw[v] = rng.between(-1000, 1000);
    const Potential phi(raw);
    for (StrategyKind kind : all_strategy_kinds()) {
      if (!is_edge_query_only(kind)) continue;
      ++runs;
      if (!check_potential_oblivious(strategy_factory(kind, n, rng.next()), l, phi)) {
        out.fail(std::string(strategy_name(kind)) + " on trial " + std::to_string(trial));
      }
    }
  }
  if (out.pass) out.detail = std::to_string(runs) + " lockstep runs";
  return out;
}

std::string classify(const DuelResult& r, int n) {
  if (!r.correct) return "incorrect-halt";
  if (r.total_ops >= det_lower_bound(n)) return "meets-bound";
  return "below-bound";
}

Outcome ac7() {
  Outcome out;
  std::ostringstream detail;
  for (int n : {9, 15}) {
    const DuelResult r = masked_duel(guarded_bf(n), n);
    if (!r.correct || !r.consistent || r.total_ops < det_lower_bound(n)) {
      out.fail("masked guarded-bf n=" + std::to_string(n) + " total_ops " + std::to_string(r.total_ops));
    }
    detail << "masked guarded-bf n=" << n << ": " << r.total_ops << " >= " << det_lower_bound(n) << "; ";
  }
  const DuelResult a = masked_duel(dijkstra_cmp(9), 9);
  const DuelResult b = masked_duel(dijkstra_cmp(9), 9);
  const std::string ca = classify(a, 9);
  if (ca == "below-bound") out.fail("masked dijkstra-cmp correct below the bound");
  if (ca != classify(b, 9) || a.transcript != b.transcript) out.fail("masked dijkstra-cmp unstable");
  if (!a.consistent) out.fail("masked dijkstra-cmp inconsistent");
  detail << "masked dijkstra-cmp n=9: " << ca;
  if (out.pass) out.detail = detail.str();
  return out;
}

Outcome ac8() {
  Outcome out;
  std::ostringstream detail;
  for (int n : {15, 25}) {
    const ExperimentStats s = experiment(StrategyKind::GuardedBF, n, 50, 8008, worker_count());
    if (s.unsettled > 0) out.fail(std::to_string(s.unsettled) + " unsettled samples at n=" + std::to_string(n));
    if (s.mean_reduced_cost < 0.9 * static_cast<double>(s.bound)) {
      out.fail("mean " + std::to_string(s.mean_reduced_cost) + " below 0.9 * " + std::to_string(s.bound));
    }
    for (int k = 1; k <= (n - 1) / 2; ++k) {
      if (s.mean_dt[k] < 0.9 * static_cast<double>(expected_phase_bound(n, k))) {
        out.fail("mean dt[" + std::to_string(k) + "] = " + std::to_string(s.mean_dt[k]) + " at n=" + std::to_string(n));
      }
    }
    char line[128];
    std::snprintf(line, sizeof line, "n=%d mean %.1f vs bound %lld; ", n, s.mean_reduced_cost,
                  static_cast<long long>(s.bound));
    detail << line;
  }
  if (out.pass) out.detail = detail.str();
  return out;
}

Outcome ac9() {
  Outcome out;
  std::ostringstream detail;
  for (int n : {15, 25, 41}) {
    const auto bf = dynamic_cast<SequenceStrategy&>(*bellman_ford(n)).sequence().size();
    const auto y = dynamic_cast<SequenceStrategy&>(*yen(n)).sequence().size();
    const auto nn = static_cast<std::size_t>(n);
    if (bf != (nn - 1) * nn * (nn - 1)) out.fail("|BF| = " + std::to_string(bf) + " at n=" + std::to_string(n));
    if (2.0 * static_cast<double>(y) > static_cast<double>(n) * n * n + 10.0 * n * n) {
      out.fail("|Yen| = " + std::to_string(y) + " at n=" + std::to_string(n));
    }
    detail << "n=" << n << " |BF|=" << bf << " |Yen|=" << y << "; ";
  }
  const auto yen25 = dynamic_cast<SequenceStrategy&>(*yen(25)).sequence().size();
  const ExperimentStats be = experiment(StrategyKind::BannisterEppstein, 25, 50, 9009, worker_count());
  if (be.unsettled > 0) out.fail("bannister-eppstein left samples unsettled");
  if (be.mean_reduced_cost > static_cast<double>(yen25)) out.fail("bannister-eppstein mean exceeds |Yen|");
  char line[160];
  std::snprintf(line, sizeof line, "bannister-eppstein n=25 mean %.1f (%.3f n^3)", be.mean_reduced_cost,
                be.mean_reduced_cost / (25.0 * 25.0 * 25.0));
  detail << line;
  if (out.pass) out.detail = detail.str();
  return out;
}

Outcome ac10() {
  Outcome out;
  const auto same = [&](const std::string& what, const std::function<std::string()>& make) {
    if (make() != make()) out.fail(what + " differs between runs");
  };
  for (const DuelCase& c : {DuelCase{15, StrategyKind::GuardedBF, 0}, DuelCase{9, StrategyKind::RandomFair, 7}}) {
    same("duel report " + describe(c), [&] {
      const DuelResult r = play(c);
      return duel_report(r, c.seed) + std::to_string(check_invariants(r, 5, 1).checks);
    });
  }
  same("yao csv", [] { return yao_csv(experiment(StrategyKind::GuardedBF, 15, 20, 8008, 1)); });
  if (yao_csv(experiment(StrategyKind::RandomFair, 11, 16, 5, 1)) !=
      yao_csv(experiment(StrategyKind::RandomFair, 11, 16, 5, worker_count()))) {
    out.fail("yao csv depends on the worker count");
  }
  same("masked duel", [] { return duel_report(masked_duel(dijkstra_cmp(9), 9), 0); });
  same("mask sidecar", [] { return mask_sidecar(make_mask_params(12, 40)); });
  same("formulas", [] { return formulas_report(41); });
  same("bench report", [] {
    Rng rng(10);
    const WeightAssignment l = oracle::random_valid_instance(7, rng);
    auto s = bannister_eppstein(7, 3);
    return bench_report(run(*s, l), "bannister-eppstein", 3, 7);
  });
  if (out.pass) out.detail = "duel, yao, mask, formulas and bench outputs byte-identical";
  return out;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, Outcome>> results;
  const auto record = [&](const std::string& name, Outcome o) {
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    results.emplace_back(name, std::move(o));
  };

  Outcome ac2;
  Outcome ac1 = ac1_ac2(ac2);
  record("AC1 deterministic lower bound", ac1);
  record("AC2 adversary truthfulness", ac2);
  record("AC3 oracle equivalence", ac3());
  record("AC4 Golomb correctness", ac4());
  record("AC5 reduction properties", ac5());
  record("AC6 potential obliviousness", ac6());
  record("AC7 masked strategies vs adversary", ac7());
  record("AC8 randomized bound", ac8());
  record("AC9 upper-bound constants", ac9());
  record("AC10 determinism", ac10());

  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.second.pass; });
  return all ? 0 : 1;
}
