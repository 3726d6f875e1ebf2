// relaxbound: experiment runner for the query/relaxation shortest-path model.
//
// Exit codes: 0 success, 1 a verification or invariant check failed,
// 2 invalid input or I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "relaxbound/adversary.hpp"
#include "relaxbound/golomb.hpp"
#include "relaxbound/reduction.hpp"
#include "relaxbound/report.hpp"
#include "relaxbound/strategies.hpp"
#include "relaxbound/transcript_io.hpp"
#include "relaxbound/yao.hpp"

namespace rb = relaxbound;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

rb::StrategyKind strategy_or_throw(const std::string& name) {
  const auto kind = rb::parse_strategy(name);
  if (!kind) throw UsageError("unknown strategy '" + name + "'");
  return *kind;
}

void require_odd(int n) {
  if (n < 3 || n % 2 == 0) throw UsageError("--n must be odd and at least 3");
}

struct DuelArgs {
  std::string strategy = "guarded-bf";
  int n = 9;
  std::optional<rb::Weight> L;
  std::uint64_t seed = 0;
  std::string out;
  std::string transcript;
  std::optional<std::int64_t> budget;
  bool wrap = false;
  int check_samples = 0;
};

int run_duel(const DuelArgs& args) {
  require_odd(args.n);
  const rb::StrategyKind kind = strategy_or_throw(args.strategy);
  const rb::Weight L = args.L.value_or(rb::default_det_length(args.n));
  if (L < rb::default_det_length(args.n)) throw UsageError("--L must be at least 5n");

  std::unique_ptr<rb::Strategy> strategy = rb::make_strategy(kind, args.n, args.seed);
  if (args.wrap) strategy = rb::wrap(std::move(strategy), rb::make_mask_params(args.n, L));
  const rb::DuelResult result = rb::duel(*strategy, args.n, L, args.budget);

  write_output(args.out, rb::duel_report(result, args.seed));
  if (!args.transcript.empty()) {
    std::ostringstream buf;
    rb::write_transcript(buf, result.transcript);
    write_output(args.transcript, buf.str());
  }

  bool ok = result.consistent;
  if (result.outcome == rb::DuelOutcome::Completed) {
    ok = ok && result.correct && result.total_ops >= rb::det_lower_bound(args.n);
    for (std::size_t k = 0; k < result.per_phase_ops.size(); ++k) {
      ok = ok && result.per_phase_ops[k] >= rb::phase_edge_count(args.n, static_cast<int>(k) + 1);
    }
    if (args.check_samples > 0) {
      const rb::InvariantReport report = rb::check_invariants(result, args.check_samples, args.seed);
      for (const auto& v : report.violations) {
        std::cerr << "violation " << v.property << " at step " << v.step << " (phase " << v.phase
                  << "): " << v.detail << '\n';
      }
      ok = ok && report.ok();
    }
  }
  return ok ? kOk : kCheckFailed;
}

int run_bench(const std::string& strategy_name, const std::string& instance, const std::string& out,
              std::uint64_t seed, std::optional<std::int64_t> budget, const std::string& transcript) {
  const rb::StrategyKind kind = strategy_or_throw(strategy_name);
  const rb::WeightAssignment l = rb::parse_instance(read_file(instance));
  std::unique_ptr<rb::Strategy> strategy = rb::make_strategy(kind, l.size(), seed);
  rb::RunOptions options;
  options.budget = budget;
  const rb::RunResult result = rb::run(*strategy, l, options);
  write_output(out, rb::bench_report(result, strategy->name(), seed, l.size()));
  if (!transcript.empty()) {
    std::ostringstream buf;
    rb::write_transcript(buf, result.transcript);
    write_output(transcript, buf.str());
  }
  return result.correct ? kOk : kCheckFailed;
}

int run_yao(const std::string& strategy_name, int n, int samples, std::uint64_t seed, const std::string& out,
            int jobs) {
  require_odd(n);
  if (samples < 1) throw UsageError("--samples must be positive");
  const rb::ExperimentStats stats = rb::experiment(strategy_or_throw(strategy_name), n, samples, seed, jobs);
  write_output(out, rb::yao_csv(stats));
  return kOk;
}

int run_golomb(int n) {
  if (n < 1) throw UsageError("--n must be positive");
  std::ostringstream buf;
  for (rb::Weight mark : rb::erdos_turan_ruler(n)) buf << mark << '\n';
  write_output("", buf.str());
  return kOk;
}

int run_mask(const std::string& instance, const std::string& out, std::string sidecar) {
  const rb::WeightAssignment l = rb::parse_instance(read_file(instance));
  const rb::MaskParams params = rb::make_mask_params(l.size(), l.max_abs());
  write_output(out, rb::format_instance(rb::combine(l, params.phi, params.c)));
  if (sidecar.empty()) sidecar = out.empty() || out == "-" ? "mask.json" : out + ".mask.json";
  write_output(sidecar, rb::mask_sidecar(params));
  return kOk;
}

int run_verify(const std::string& transcript_path, const std::string& instance) {
  const rb::WeightAssignment l = rb::parse_instance(read_file(instance));
  std::istringstream in(read_file(transcript_path));
  const rb::Transcript transcript = rb::read_transcript(in);
  const rb::ReplayResult result = rb::replay(transcript, l);
  if (result.consistent) {
    std::cout << "consistent: " << transcript.size() << " steps\n";
    return kOk;
  }
  std::cout << "inconsistent: first mismatch at step " << *result.first_mismatch << '\n';
  return kCheckFailed;
}

int run_formulas(int n) {
  if (n < 1) throw UsageError("--n must be positive");
  write_output("", rb::formulas_report(n));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query/relaxation model experiments: adversary duels, benchmarks, randomized experiments"};
  app.require_subcommand(1);

  DuelArgs duel;
  auto* duel_cmd = app.add_subcommand("duel", "Play a strategy against the edge-query adversary");
  duel_cmd->add_option("--strategy", duel.strategy, "Strategy name")->capture_default_str();
  duel_cmd->add_option("--n", duel.n, "Vertex count (odd)")->capture_default_str();
  duel_cmd->add_option("--L", duel.L, "Long-edge length (default 5n)");
  duel_cmd->add_option("--seed", duel.seed, "Strategy seed")->capture_default_str();
  duel_cmd->add_option("--out", duel.out, "Report path (default stdout)");
  duel_cmd->add_option("--transcript", duel.transcript, "Write the transcript here");
  duel_cmd->add_option("--budget", duel.budget, "Step budget (default 3n^3)");
  duel_cmd->add_flag("--wrap", duel.wrap, "Splice D-/weight-queries out with a Golomb-ruler mask first");
  duel_cmd->add_option("--check-samples", duel.check_samples,
                       "Completions sampled per phase when certifying invariants (0 = skip)");

  std::string bench_strategy = "bellman-ford";
  std::string bench_instance;
  std::string bench_out;
  std::string bench_transcript;
  std::uint64_t bench_seed = 0;
  std::optional<std::int64_t> bench_budget;
  auto* bench_cmd = app.add_subcommand("bench", "Run a strategy on an instance file");
  bench_cmd->add_option("--strategy", bench_strategy, "Strategy name")->capture_default_str();
  bench_cmd->add_option("--instance-file,--instance", bench_instance, "Instance document")->required();
  bench_cmd->add_option("--out", bench_out, "Report path (default stdout)");
  bench_cmd->add_option("--seed", bench_seed, "Strategy seed")->capture_default_str();
  bench_cmd->add_option("--budget", bench_budget, "Step budget (default 3n^3)");
  bench_cmd->add_option("--transcript", bench_transcript, "Write the transcript here");

  std::string yao_strategy = "guarded-bf";
  int yao_n = 15;
  int yao_samples = 50;
  std::uint64_t yao_seed = 0;
  std::string yao_out;
  int yao_jobs = 1;
  auto* yao_cmd = app.add_subcommand("yao", "Run a strategy on sampled randomized hard instances");
  yao_cmd->add_option("--strategy", yao_strategy, "Strategy name")->capture_default_str();
  yao_cmd->add_option("--n", yao_n, "Vertex count (odd)")->capture_default_str();
  yao_cmd->add_option("--samples", yao_samples, "Number of sampled permutations")->capture_default_str();
  yao_cmd->add_option("--seed", yao_seed, "Master seed")->capture_default_str();
  yao_cmd->add_option("--out", yao_out, "CSV path (default stdout)");
  yao_cmd->add_option("--jobs", yao_jobs, "Worker threads")->capture_default_str();

  int golomb_n = 0;
  auto* golomb_cmd = app.add_subcommand("golomb", "Print an n-mark Golomb ruler");
  golomb_cmd->add_option("--n", golomb_n, "Number of marks")->required();

  std::string mask_instance;
  std::string mask_out;
  std::string mask_sidecar;
  auto* mask_cmd = app.add_subcommand("mask", "Apply the Golomb-ruler potential mask to an instance");
  mask_cmd->add_option("--instance-file,--instance", mask_instance, "Instance document")->required();
  mask_cmd->add_option("--out", mask_out, "Masked instance path (default stdout)");
  mask_cmd->add_option("--sidecar", mask_sidecar, "Path for {phi, c} (default <out>.mask.json)");

  std::string verify_transcript;
  std::string verify_instance;
  auto* verify_cmd = app.add_subcommand("verify", "Replay a transcript against an instance");
  verify_cmd->add_option("--transcript", verify_transcript, "Transcript file")->required();
  verify_cmd->add_option("--instance-file,--instance", verify_instance, "Instance document")->required();

  int formulas_n = 0;
  auto* formulas_cmd = app.add_subcommand("formulas", "Print the closed-form bounds for n");
  formulas_cmd->add_option("--n", formulas_n, "Vertex count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*duel_cmd) return run_duel(duel);
    if (*bench_cmd) {
      return run_bench(bench_strategy, bench_instance, bench_out, bench_seed, bench_budget, bench_transcript);
    }
    if (*yao_cmd) return run_yao(yao_strategy, yao_n, yao_samples, yao_seed, yao_out, yao_jobs);
    if (*golomb_cmd) return run_golomb(golomb_n);
    if (*mask_cmd) return run_mask(mask_instance, mask_out, mask_sidecar);
    if (*verify_cmd) return run_verify(verify_transcript, verify_instance);
    if (*formulas_cmd) return run_formulas(formulas_n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const rb::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const rb::InvalidInstance& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const rb::NegativeCycle& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const rb::ModelViolation& e) {
    std::cerr << "model violation: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
