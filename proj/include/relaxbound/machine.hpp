#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "relaxbound/core.hpp"

namespace relaxbound {

enum class OpKind : std::uint8_t { Relax, EdgeQuery, DQuery, WeightQuery };

using KindMask = std::uint8_t;

constexpr KindMask kind_bit(OpKind kind) { return static_cast<KindMask>(1U << static_cast<unsigned>(kind)); }

inline constexpr KindMask kRelaxOnly = kind_bit(OpKind::Relax);
inline constexpr KindMask kEdgeQueryModel = kind_bit(OpKind::Relax) | kind_bit(OpKind::EdgeQuery);
inline constexpr KindMask kAllKinds =
    kEdgeQueryModel | kind_bit(OpKind::DQuery) | kind_bit(OpKind::WeightQuery);

/// One model operation. `x`/`y` are used by weight queries only.
///   Relax(u,v):          D[v] := min(D[v], D[u] + l(u,v))
///   EdgeQuery(u,v):      D[u] + l(u,v) < D[v] ?
///   DQuery(u,v):         D[u] < D[v] ?
///   WeightQuery(u,v,x,y): l(u,v) < l(x,y) ?
struct Operation {
  OpKind kind = OpKind::Relax;
  Vertex u = 0;
  Vertex v = 0;
  Vertex x = -1;
  Vertex y = -1;

  static Operation relax(Vertex u, Vertex v) { return {OpKind::Relax, u, v}; }
  static Operation edge_query(Vertex u, Vertex v) { return {OpKind::EdgeQuery, u, v}; }
  static Operation d_query(Vertex u, Vertex v) { return {OpKind::DQuery, u, v}; }
  static Operation weight_query(Vertex u, Vertex v, Vertex x, Vertex y) {
    return {OpKind::WeightQuery, u, v, x, y};
  }

  /// Relaxations and edge queries "access" the edge (u, v).
  bool accesses_edge() const { return kind == OpKind::Relax || kind == OpKind::EdgeQuery; }

  bool operator==(const Operation&) const = default;
};

enum class Answer : std::uint8_t { Yes, No, Done };

inline Answer from_bool(bool yes) { return yes ? Answer::Yes : Answer::No; }

std::string to_string(const Operation& op);
std::string_view to_string(Answer answer);

/// Thrown when an operation is malformed or outside the kinds a strategy
/// declared or an environment supports.
class ModelViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws ModelViolation unless `op` is well formed for n vertices.
void validate(const Operation& op, int n);

struct DState {
  std::vector<Weight> d;
  std::vector<std::optional<Vertex>> parent;

  bool operator==(const DState&) const = default;
};

/// D[s] = 0, D[v] = l(s, v), every parent s.
DState init_dstate(const WeightAssignment& l);

/// Concrete semantics of one operation; mutates `state` for relaxations only.
Answer apply(DState& state, const Operation& op, const WeightAssignment& l);

struct Step {
  std::int64_t t = 0;
  Operation op;
  Answer answer = Answer::Done;

  bool operator==(const Step&) const = default;
};

/// Steps numbered 1, 2, ... in order.
using Transcript = std::vector<Step>;

/// An algorithm in the model. The first call receives Answer::Done; every
/// later call receives the answer to the previously returned operation.
/// Returning nullopt halts. Implementations must not see weights or D-values.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::optional<Operation> next(Answer previous) = 0;
  /// Operation kinds this strategy may emit; the machine enforces it.
  virtual KindMask kinds() const = 0;
  virtual std::string name() const = 0;
};

using StrategyFactory = std::function<std::unique_ptr<Strategy>()>;

class Environment {
 public:
  virtual ~Environment() = default;
  virtual Answer answer(const Operation& op) = 0;
  virtual bool supports(OpKind kind) const = 0;
};

/// Answers truthfully for a fixed assignment and tracks the D-state together
/// with the number of vertices whose D-value differs from the true distance.
class ConcreteEnvironment final : public Environment {
 public:
  explicit ConcreteEnvironment(const WeightAssignment& l);
  ConcreteEnvironment(const WeightAssignment& l, DState start);

  Answer answer(const Operation& op) override;
  bool supports(OpKind) const override { return true; }

  const DState& state() const { return state_; }
  const DistanceVector& truth() const { return truth_; }
  /// True iff the D-vector equals the true distances.
  bool settled() const { return mismatches_ == 0; }

 private:
  const WeightAssignment* l_;
  DistanceVector truth_;
  DState state_;
  int mismatches_ = 0;
};

enum class RunStatus : std::uint8_t { Halted, BudgetExhausted, Stopped };

std::string_view to_string(RunStatus status);

/// Feeds `strategy` operations to `env`, appending to `transcript`, until the
/// strategy halts, `stop` returns true after a step (Stopped), or the
/// transcript holds `budget` steps. `previous` is the answer handed to the
/// strategy's first call, so a run can resume where an earlier drive ended.
RunStatus drive(Strategy& strategy, Environment& env, int n, Transcript& transcript,
                std::int64_t budget, const std::function<bool()>& stop = {},
                Answer previous = Answer::Done);

/// 2n^3 for truncation to Bellman-Ford plus n^3 slack.
std::int64_t default_budget(int n);

struct RunOptions {
  std::optional<std::int64_t> budget;
  /// End the run as soon as the D-vector is correct.
  bool stop_when_settled = false;
};

struct RunResult {
  Transcript transcript;
  DState final_state;
  /// First step after which D equals the true distances; nullopt if never.
  std::optional<std::int64_t> reduced_cost;
  bool correct = false;
  RunStatus status = RunStatus::Halted;
};

RunResult run(Strategy& strategy, const WeightAssignment& l, const RunOptions& options = {});

struct ReplayResult {
  bool consistent = true;
  std::optional<std::int64_t> first_mismatch;
  DState final_state;
};

/// Re-executes the operations of `steps` on `l` from the initial D-state and
/// compares each recorded answer with the recomputed one.
ReplayResult replay(std::span<const Step> steps, const WeightAssignment& l);

}  // namespace relaxbound
