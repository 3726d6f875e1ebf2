#include "relaxbound/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "relaxbound/strategies.hpp"

namespace relaxbound {

using Json = nlohmann::ordered_json;

namespace {

std::string fixed3(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  return buf;
}

}  // namespace

std::string duel_report(const DuelResult& result, std::uint64_t seed) {
  Json doc;
  doc["n"] = result.n;
  doc["L"] = result.L;
  doc["strategy"] = result.strategy;
  doc["seed"] = seed;
  doc["outcome"] = to_string(result.outcome);
  doc["total_ops"] = result.total_ops;
  doc["per_phase_ops"] = result.per_phase_ops;
  doc["pi"] = result.pi;
  doc["lower_bound"] = det_lower_bound(result.n);
  doc["consistent"] = result.consistent;
  doc["correct"] = result.correct;
  return doc.dump(2) + "\n";
}

std::string bench_report(const RunResult& result, const std::string& strategy, std::uint64_t seed, int n) {
  Json doc;
  doc["strategy"] = strategy;
  doc["seed"] = seed;
  doc["n"] = n;
  doc["ops"] = result.transcript.size();
  doc["reduced_cost"] = result.reduced_cost ? Json(*result.reduced_cost) : Json(nullptr);
  doc["correct"] = result.correct;
  doc["status"] = to_string(result.status);
  return doc.dump(2) + "\n";
}

std::string yao_csv(const ExperimentStats& stats) {
  const int phases = (stats.n - 1) / 2;
  const std::string name(strategy_name(stats.strategy));
  std::ostringstream out;
  out << "sample,strategy,n,seed,reduced_cost";
  for (int k = 1; k <= phases; ++k) out << ",t_" << k;
  out << ",bound\n";
  for (const SampleRecord& rec : stats.records) {
    out << rec.sample << ',' << name << ',' << stats.n << ',' << rec.seed << ',';
    if (rec.reduced_cost) out << *rec.reduced_cost;
    for (int k = 1; k <= phases; ++k) {
      out << ',';
      if (!rec.t.empty()) out << rec.t[k];
    }
    out << ",\n";
  }
  out << "mean," << name << ',' << stats.n << ',' << stats.seed << ',' << fixed3(stats.mean_reduced_cost);
  double t_mean = 0.0;
  for (int k = 1; k <= phases; ++k) {
    t_mean += stats.mean_dt[k];
    out << ',' << fixed3(t_mean);
  }
  out << ',' << stats.bound << '\n';
  return out.str();
}

std::string mask_sidecar(const MaskParams& params) {
  Json doc;
  doc["phi"] = std::vector<Weight>(params.phi.values().begin(), params.phi.values().end());
  doc["c"] = params.c;
  return doc.dump() + "\n";
}

std::string formulas_report(int n) {
  std::ostringstream out;
  const std::int64_t m = n;
  out << "n = " << n << '\n';
  if (n % 2 == 1) {
    out << "deterministic lower bound n(n^2-1)/6 = " << det_lower_bound(n) << '\n';
    out << "randomized lower bound sum_k (n-2k+1)(n-2k+2)/2 = " << expected_lower_bound(n) << '\n';
  }
  out << "bellman-ford sequence (n-1)n(n-1) = " << (m - 1) * m * (m - 1) << '\n';
  out << "yen sequence (ceil(n/2)+1)n(n-1) = " << ((m + 1) / 2 + 1) * m * (m - 1) << '\n';
  out << "truncation budget 3n^3 = " << default_budget(n) << '\n';
  return out.str();
}

}  // namespace relaxbound
