#include "relaxbound/machine.hpp"

#include <string>

namespace relaxbound {

std::string to_string(const Operation& op) {
  const auto edge = [](Vertex a, Vertex b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  switch (op.kind) {
    case OpKind::Relax:
      return "relax" + edge(op.u, op.v);
    case OpKind::EdgeQuery:
      return "eq" + edge(op.u, op.v);
    case OpKind::DQuery:
      return "dq" + edge(op.u, op.v);
    case OpKind::WeightQuery:
      return "wq" + edge(op.u, op.v) + edge(op.x, op.y);
  }
  return "?";
}

std::string_view to_string(Answer answer) {
  switch (answer) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    case Answer::Done:
      return "done";
  }
  return "?";
}

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::Halted:
      return "halted";
    case RunStatus::BudgetExhausted:
      return "budget-exhausted";
    case RunStatus::Stopped:
      return "stopped";
  }
  return "?";
}

void validate(const Operation& op, int n) {
  const auto in_range = [n](Vertex w) { return w >= 0 && w < n; };
  bool ok = in_range(op.u) && in_range(op.v) && op.u != op.v;
  if (op.kind == OpKind::WeightQuery) ok = ok && in_range(op.x) && in_range(op.y) && op.x != op.y;
  if (!ok) throw ModelViolation("malformed operation " + to_string(op));
}

DState init_dstate(const WeightAssignment& l) {
  const int n = l.size();
  DState state;
  state.d.assign(static_cast<std::size_t>(n), 0);
  state.parent.assign(static_cast<std::size_t>(n), kSource);
  state.parent[kSource] = std::nullopt;
  for (Vertex v = 1; v < n; ++v) state.d[v] = l(kSource, v);
  return state;
}

Answer apply(DState& state, const Operation& op, const WeightAssignment& l) {
  switch (op.kind) {
    case OpKind::Relax: {
      const Weight candidate = state.d[op.u] + l(op.u, op.v);
      if (candidate < state.d[op.v]) {
        state.d[op.v] = candidate;
        state.parent[op.v] = op.u;
      }
      return Answer::Done;
    }
    case OpKind::EdgeQuery:
      return from_bool(state.d[op.u] + l(op.u, op.v) < state.d[op.v]);
    case OpKind::DQuery:
      return from_bool(state.d[op.u] < state.d[op.v]);
    case OpKind::WeightQuery:
      return from_bool(l(op.u, op.v) < l(op.x, op.y));
  }
  return Answer::Done;
}

ConcreteEnvironment::ConcreteEnvironment(const WeightAssignment& l)
    : ConcreteEnvironment(l, init_dstate(l)) {}

ConcreteEnvironment::ConcreteEnvironment(const WeightAssignment& l, DState start)
    : l_(&l), truth_(true_distances(l)), state_(std::move(start)) {
  for (std::size_t v = 0; v < truth_.size(); ++v) {
    if (state_.d[v] != truth_[v]) ++mismatches_;
  }
}

Answer ConcreteEnvironment::answer(const Operation& op) {
  if (op.kind != OpKind::Relax) return apply(state_, op, *l_);
  const bool was_wrong = state_.d[op.v] != truth_[op.v];
  const Answer out = apply(state_, op, *l_);
  const bool is_wrong = state_.d[op.v] != truth_[op.v];
  mismatches_ += static_cast<int>(is_wrong) - static_cast<int>(was_wrong);
  return out;
}

RunStatus drive(Strategy& strategy, Environment& env, int n, Transcript& transcript,
                std::int64_t budget, const std::function<bool()>& stop, Answer previous) {
  const KindMask declared = strategy.kinds();
  while (static_cast<std::int64_t>(transcript.size()) < budget) {
    const std::optional<Operation> op = strategy.next(previous);
    if (!op) return RunStatus::Halted;
    validate(*op, n);
    if ((declared & kind_bit(op->kind)) == 0) {
      throw ModelViolation(strategy.name() + " emitted undeclared operation " + to_string(*op));
    }
    if (!env.supports(op->kind)) {
      throw ModelViolation("environment does not support " + to_string(*op));
    }
    previous = env.answer(*op);
    transcript.push_back({static_cast<std::int64_t>(transcript.size()) + 1, *op, previous});
    if (stop && stop()) return RunStatus::Stopped;
  }
  return RunStatus::BudgetExhausted;
}

std::int64_t default_budget(int n) {
  const std::int64_t cube = std::int64_t{n} * n * n;
  return 2 * cube + cube;
}

RunResult run(Strategy& strategy, const WeightAssignment& l, const RunOptions& options) {
  const int n = l.size();
  ConcreteEnvironment env(l);
  RunResult result;
  if (env.settled()) result.reduced_cost = 0;
  const auto observe = [&] {
    if (!result.reduced_cost && env.settled()) {
      result.reduced_cost = static_cast<std::int64_t>(result.transcript.size());
    }
    return options.stop_when_settled && env.settled();
  };
  if (options.stop_when_settled && env.settled()) {
    result.status = RunStatus::Stopped;
  } else {
    result.status = drive(strategy, env, n, result.transcript, options.budget.value_or(default_budget(n)),
                          observe);
  }
  result.final_state = env.state();
  result.correct = env.settled();
  return result;
}

ReplayResult replay(std::span<const Step> steps, const WeightAssignment& l) {
  ReplayResult result;
  result.final_state = init_dstate(l);
  for (const Step& step : steps) {
    validate(step.op, l.size());
    const Answer recomputed = apply(result.final_state, step.op, l);
    if (result.consistent && recomputed != step.answer) {
      result.consistent = false;
      result.first_mismatch = step.t;
    }
  }
  return result;
}

}  // namespace relaxbound
