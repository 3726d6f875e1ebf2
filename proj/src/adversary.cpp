#include "relaxbound/adversary.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace relaxbound {

Adversary::Adversary(int n, Weight L)
    : n_(n), L_(L), in_y_(static_cast<std::size_t>(n), 1), marks_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 3 || n % 2 == 0) throw InvalidInstance("adversary: n must be odd and >= 3");
  if (L < default_det_length(n)) throw InvalidInstance("adversary: L must be at least 5n");
  prefix_.push_back(kSource);
  in_y_[kSource] = 0;
  start_phase();
  // D[v] starts at l(s, v), which is what relaxing every (s, v) would give.
  for (Vertex v = 1; v < n_; ++v) mark(kSource, v);
}

void Adversary::start_phase() {
  std::fill(marks_.begin(), marks_.end(), 0);
  const auto y = static_cast<std::int64_t>(n_ - static_cast<int>(prefix_.size()));
  unmarked_ = y * y;
  unmarked_a_ = y;
}

bool Adversary::in_current_edge_set(Vertex u, Vertex v) const {
  if (finished() || u == v || !in_y_[v]) return false;
  return u == head() || in_y_[u];
}

bool Adversary::marked(Vertex u, Vertex v) const { return marks_[index(u, v)] != 0; }

void Adversary::mark(Vertex u, Vertex v) {
  char& bit = marks_[index(u, v)];
  if (bit) return;
  bit = 1;
  --unmarked_;
  if (u == head()) --unmarked_a_;
  if (unmarked_ == 1 && unmarked_a_ != 0) {
    throw std::logic_error("adversary: last unmarked edge lies outside B");
  }
}

void Adversary::end_phase(Vertex u, Vertex v) {
  last_pair_ = {u, v};
  prefix_.push_back(u);
  prefix_.push_back(v);
  in_y_[u] = 0;
  in_y_[v] = 0;
  phase_end_.push_back(steps_);
  ++phase_;
  if (!finished()) start_phase();
}

Answer Adversary::answer(const Operation& op) {
  if (!supports(op.kind)) {
    throw ModelViolation("adversary answers edge queries and relaxations only, got " + to_string(op));
  }
  if (finished()) throw ModelViolation("adversary game already finished");
  validate(op, n_);
  ++steps_;
  const bool relax = op.kind == OpKind::Relax;
  const Vertex u = op.u;
  const Vertex v = op.v;

  if (u == head() && in_y_[v]) {  // (s1): edge in A
    if (relax) {
      mark(u, v);
      return Answer::Done;
    }
    return from_bool(!marked(u, v));
  }

  if (in_y_[u] && in_y_[v]) {  // (s2): edge in B
    const bool tail_reached = marked(head(), u);
    if (relax) {
      if (tail_reached && !marked(u, v)) {
        mark(u, v);
        if (unmarked_ == 0) end_phase(u, v);
      }
      return Answer::Done;
    }
    if (!tail_reached) return Answer::No;
    if (!marked(u, v) && unmarked_ == 1) return Answer::Yes;
    mark(u, v);
    return Answer::No;
  }

  // (s3)
  return relax ? Answer::Done : Answer::No;
}

Permutation Adversary::permutation() const {
  if (!finished()) throw std::logic_error("adversary: permutation requested before the game ended");
  return prefix_;
}

WeightAssignment Adversary::materialize() const { return hard_det(permutation(), L_); }

Permutation Adversary::complete(std::optional<std::pair<Vertex, Vertex>> next_pair, Rng* rng) const {
  Permutation pi = prefix_;
  if (next_pair) {
    pi.push_back(next_pair->first);
    pi.push_back(next_pair->second);
  }
  const std::size_t fixed = pi.size();
  for (Vertex w = 0; w < n_; ++w) {
    if (in_y_[w] && (!next_pair || (w != next_pair->first && w != next_pair->second))) pi.push_back(w);
  }
  if (rng) rng->shuffle(std::span<Vertex>(pi).subspan(fixed));
  return pi;
}

Permutation Adversary::canonical_completion() const {
  if (finished()) return prefix_;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      if (u != v && in_y_[u] && in_y_[v] && !marked(u, v)) return complete(std::pair{u, v}, nullptr);
    }
  }
  throw std::logic_error("adversary: active phase without an unmarked B edge");
}

Permutation Adversary::sample_completion(Rng& rng) const {
  if (finished()) return prefix_;
  std::vector<std::pair<Vertex, Vertex>> open;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      if (u != v && in_y_[u] && in_y_[v] && !marked(u, v)) open.emplace_back(u, v);
    }
  }
  if (open.empty()) throw std::logic_error("adversary: active phase without an unmarked B edge");
  const auto pick = open[static_cast<std::size_t>(rng.below(open.size()))];
  return complete(pick, &rng);
}

std::int64_t det_lower_bound(int n) {
  const std::int64_t m = n;
  return m * (m * m - 1) / 6;
}

std::int64_t phase_edge_count(int n, int k) {
  const std::int64_t side = n - 2 * k + 1;
  return side * side;
}

std::string_view to_string(DuelOutcome outcome) {
  switch (outcome) {
    case DuelOutcome::Completed:
      return "completed";
    case DuelOutcome::HaltedEarly:
      return "halted-early";
    case DuelOutcome::BudgetExhausted:
      return "budget-exhausted";
  }
  return "?";
}

namespace {

struct ConcreteReplay {
  bool consistent = true;
  std::optional<std::int64_t> first_settled;
  DState state;
};

// Replays on a concrete instance, tracking when D first equals the truth.
ConcreteReplay replay_tracking(std::span<const Step> steps, const WeightAssignment& l) {
  ConcreteEnvironment env(l);
  ConcreteReplay out;
  if (env.settled()) out.first_settled = 0;
  for (const Step& step : steps) {
    if (env.answer(step.op) != step.answer) out.consistent = false;
    if (!out.first_settled && env.settled()) out.first_settled = step.t;
  }
  out.state = env.state();
  return out;
}

}  // namespace

DuelResult duel(Strategy& strategy, int n, std::optional<Weight> L, std::optional<std::int64_t> budget) {
  Adversary adversary(n, L.value_or(default_det_length(n)));
  const std::int64_t limit = budget.value_or(default_budget(n));

  DuelResult result;
  result.n = n;
  result.L = adversary.length();
  result.strategy = strategy.name();

  const RunStatus game = drive(strategy, adversary, n, result.transcript, limit,
                               [&] { return adversary.finished(); });
  result.phase_end_steps.assign(adversary.phase_end_steps().begin(), adversary.phase_end_steps().end());
  std::int64_t previous_end = 0;
  for (std::int64_t end : result.phase_end_steps) {
    result.per_phase_ops.push_back(end - previous_end);
    previous_end = end;
  }

  if (!adversary.finished()) {
    result.outcome = game == RunStatus::Halted ? DuelOutcome::HaltedEarly : DuelOutcome::BudgetExhausted;
    result.pi = adversary.canonical_completion();
    result.l_pi = hard_det(result.pi, result.L);
    const ConcreteReplay rep = replay_tracking(result.transcript, result.l_pi);
    result.consistent = rep.consistent;
    result.correct = rep.first_settled.has_value() && rep.state.d == true_distances(result.l_pi);
    result.total_ops = static_cast<std::int64_t>(result.transcript.size());
    return result;
  }

  result.pi = adversary.permutation();
  result.l_pi = adversary.materialize();
  const ConcreteReplay rep = replay_tracking(result.transcript, result.l_pi);
  result.consistent = rep.consistent;

  ConcreteEnvironment env(result.l_pi, rep.state);
  RunStatus tail = RunStatus::Stopped;
  if (!env.settled()) {
    tail = drive(strategy, env, n, result.transcript, limit, [&] { return env.settled(); },
                 result.transcript.empty() ? Answer::Done : result.transcript.back().answer);
  }
  result.correct = env.settled();
  if (!result.correct && tail == RunStatus::BudgetExhausted) result.outcome = DuelOutcome::BudgetExhausted;
  if (result.correct) {
    result.total_ops = rep.first_settled.value_or(static_cast<std::int64_t>(result.transcript.size()));
  } else {
    result.total_ops = static_cast<std::int64_t>(result.transcript.size());
  }
  return result;
}

namespace {

enum class CheckKind { Boundary, Interior, BeforePhaseEnd };

struct Checkpoint {
  std::int64_t t = 0;
  int phase = 0;
  CheckKind kind = CheckKind::Boundary;
  // Interior only: mark of (x_{2k-2}, w) per vertex, and of (u*, v*).
  std::vector<char> head_marked;
  bool pair_marked = false;
};

// Permutation with the first `fixed` entries of `pi` and the rest shuffled.
Permutation shuffle_suffix(const Permutation& pi, std::size_t fixed, Rng& rng) {
  Permutation out = pi;
  rng.shuffle(std::span<Vertex>(out).subspan(fixed));
  return out;
}

}  // namespace

InvariantReport check_invariants(const DuelResult& result, int samples, std::uint64_t seed) {
  InvariantReport report;
  const auto fail = [&](std::int64_t step, int phase, std::string property, std::string detail) {
    report.violations.push_back({step, phase, std::move(property), std::move(detail)});
  };
  if (result.outcome != DuelOutcome::Completed) {
    fail(0, 0, "precondition", "duel did not complete the game");
    return report;
  }
  const int n = result.n;
  const Weight L = result.L;
  const int phases = (n - 1) / 2;
  Rng rng(seed);

  // The final permutation must explain the whole transcript.
  ++report.checks;
  const ReplayResult whole = replay(result.transcript, result.l_pi);
  if (!whole.consistent) fail(*whole.first_mismatch, 0, "I0", "final permutation contradicts an answer");

  // Find the adversary part of the transcript, then schedule checkpoints.
  const std::int64_t game_steps = result.phase_end_steps.empty() ? 0 : result.phase_end_steps.back();
  std::vector<Checkpoint> points;
  for (int k = 1; k <= phases; ++k) {
    const std::int64_t start = k == 1 ? 0 : result.phase_end_steps[k - 2];
    const std::int64_t end = result.phase_end_steps[k - 1];
    for (int i = 0; i < samples; ++i) {
      points.push_back({end, k, CheckKind::Boundary, {}, false});
      points.push_back({rng.between(start, end - 1), k, CheckKind::Interior, {}, false});
    }
    points.push_back({end - 1, k, CheckKind::BeforePhaseEnd, {}, false});
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const Checkpoint& a, const Checkpoint& b) { return a.t < b.t; });

  // Re-run the adversary on the recorded operations to recover its marks.
  Adversary adversary(n, L);
  std::size_t next_point = 0;
  const auto capture = [&] {
    while (next_point < points.size() && points[next_point].t == adversary.steps()) {
      Checkpoint& cp = points[next_point++];
      if (cp.kind != CheckKind::Interior) continue;
      if (adversary.phase() != cp.phase) {
        fail(cp.t, cp.phase, "J", "interior step not inside its phase");
        continue;
      }
      const Vertex head = result.pi[2 * cp.phase - 2];
      cp.head_marked.assign(static_cast<std::size_t>(n), 0);
      for (Vertex w = 0; w < n; ++w) {
        if (adversary.in_current_edge_set(head, w)) cp.head_marked[w] = adversary.marked(head, w);
      }
      const Vertex us = result.pi[2 * cp.phase - 1];
      const Vertex vs = result.pi[2 * cp.phase];
      cp.pair_marked = adversary.marked(us, vs);
    }
  };
  capture();
  for (std::int64_t t = 0; t < game_steps; ++t) {
    const Step& step = result.transcript[static_cast<std::size_t>(t)];
    ++report.checks;
    if (adversary.answer(step.op) != step.answer) fail(step.t, adversary.phase(), "determinism", "answer differs on rerun");
    capture();
  }
  if (!std::equal(adversary.prefix().begin(), adversary.prefix().end(), result.pi.begin(), result.pi.end())) {
    fail(game_steps, phases, "determinism", "rerun commits a different permutation");
    return report;
  }

  const std::span<const Step> all(result.transcript);
  for (const Checkpoint& cp : points) {
    const int k = cp.phase;
    // Every completion keeps the prefix through this phase's pair (u*, v*).
    const auto fixed = static_cast<std::size_t>(2 * k + 1);
    const Permutation pi = shuffle_suffix(result.pi, fixed, rng);
    const WeightAssignment l = hard_det(pi, L);
    const ReplayResult rep = replay(all.first(static_cast<std::size_t>(cp.t)), l);
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) position[pi[j]] = j;
    const auto& d = rep.final_state.d;
    ++report.checks;

    switch (cp.kind) {
      case CheckKind::Boundary: {
        if (!rep.consistent) fail(*rep.first_mismatch, k, "I0", "answer wrong for a consistent completion");
        for (int j = 0; j < n; ++j) {
          const Vertex w = pi[j];
          if (j <= 2 * k && d[w] != 2 * j) {
            fail(cp.t, k, "I1", "D[x_" + std::to_string(j) + "] = " + std::to_string(d[w]));
          } else if (j > 2 * k && d[w] != L - k + 1) {
            fail(cp.t, k, "I2", "D[" + std::to_string(w) + "] = " + std::to_string(d[w]));
          }
        }
        break;
      }
      case CheckKind::Interior: {
        if (!rep.consistent) fail(*rep.first_mismatch, k, "J0", "answer wrong for a consistent completion");
        const Vertex us = pi[2 * k - 1];
        const Vertex vs = pi[2 * k];
        for (int j = 0; j < n; ++j) {
          const Vertex w = pi[j];
          Weight expected = 0;
          std::string id;
          if (j <= 2 * k - 2) {
            expected = 2 * j;
            id = "J1";
          } else if (!cp.head_marked[w]) {
            expected = L - k + 2;
            id = w == us ? "J2.2" : w == vs ? "J2.3" : "J2.1";
          } else if (w == us) {
            expected = 4 * k - 2;
            id = "J2.2";
          } else if (w == vs) {
            expected = cp.pair_marked ? 4 * k : L - k + 1;
            id = "J2.3";
          } else {
            expected = L - k + 1;
            id = "J2.1";
          }
          if (d[w] != expected) {
            fail(cp.t, k, id,
                 "D[" + std::to_string(w) + "] = " + std::to_string(d[w]) + ", expected " + std::to_string(expected));
          }
        }
        break;
      }
      case CheckKind::BeforePhaseEnd: {
        bool pending = false;
        for (int j = 0; j < n; ++j) {
          const Weight dw = d[pi[j]];
          if (dw >= L - k + 1 && dw > 2 * j) pending = true;
        }
        if (!pending) fail(cp.t, k, "final-step", "D already correct before the phase-ending step");
        break;
      }
    }
  }
  return report;
}

}  // namespace relaxbound
