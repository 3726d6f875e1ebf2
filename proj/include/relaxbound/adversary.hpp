#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relaxbound/core.hpp"
#include "relaxbound/machine.hpp"
#include "relaxbound/rng.hpp"

namespace relaxbound {

/// The interactive adversary for the edge-query model. It commits the hard
/// permutation two vertices per phase and answers from edge marks alone; it
/// keeps no D-values.
///
/// During phase k the committed prefix is x_0..x_{2k-2}, Y is the set of
/// uncommitted vertices, A the edges x_{2k-2} -> Y and B the edges inside Y.
/// Edges (s, v) start marked so answers agree with D[v] = l(s, v).
class Adversary final : public Environment {
 public:
  /// Requires odd n >= 3 and L >= 5n.
  Adversary(int n, Weight L);

  /// Edge queries and relaxations only; anything else is a ModelViolation.
  Answer answer(const Operation& op) override;
  bool supports(OpKind kind) const override {
    return kind == OpKind::Relax || kind == OpKind::EdgeQuery;
  }

  int size() const { return n_; }
  Weight length() const { return L_; }
  /// Current phase k, 1-based; equals phase_count() + 1 once finished.
  int phase() const { return phase_; }
  int phase_count() const { return (n_ - 1) / 2; }
  bool finished() const { return phase_ > phase_count(); }
  std::span<const Vertex> prefix() const { return prefix_; }
  /// Operations answered so far.
  std::int64_t steps() const { return steps_; }
  /// Step index (1-based) of the operation that ended each completed phase.
  std::span<const std::int64_t> phase_end_steps() const { return phase_end_; }

  bool in_current_edge_set(Vertex u, Vertex v) const;
  /// Mark bit of an edge in the current A or B.
  bool marked(Vertex u, Vertex v) const;
  std::int64_t unmarked_count() const { return unmarked_; }
  std::int64_t unmarked_in_a() const { return unmarked_a_; }
  /// The edge marked last, once a phase has ended.
  std::optional<std::pair<Vertex, Vertex>> last_pair() const { return last_pair_; }

  /// The committed permutation; requires finished().
  Permutation permutation() const;
  /// hard_det of the committed permutation; requires finished().
  WeightAssignment materialize() const;

  /// A permutation consistent with every answer given so far: the prefix,
  /// then (mid-phase) an unmarked B edge as the next two vertices, then the
  /// rest. The canonical choice takes the lexicographically first unmarked
  /// B edge and ascending order; the sampled one draws both uniformly.
  Permutation canonical_completion() const;
  Permutation sample_completion(Rng& rng) const;

 private:
  void start_phase();
  void mark(Vertex u, Vertex v);
  void end_phase(Vertex u, Vertex v);
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }
  Vertex head() const { return prefix_.back(); }
  Permutation complete(std::optional<std::pair<Vertex, Vertex>> next_pair, Rng* rng) const;

  int n_;
  Weight L_;
  int phase_ = 1;
  Permutation prefix_;
  std::vector<char> in_y_;
  std::vector<char> marks_;
  std::int64_t unmarked_ = 0;
  std::int64_t unmarked_a_ = 0;
  std::optional<std::pair<Vertex, Vertex>> last_pair_;
  std::int64_t steps_ = 0;
  std::vector<std::int64_t> phase_end_;
};

/// n(n^2 - 1) / 6, the sum of (n - 2k + 1)^2 over phases k; n odd.
std::int64_t det_lower_bound(int n);

/// (n - 2k + 1)^2, the size of A u B in phase k.
std::int64_t phase_edge_count(int n, int k);

enum class DuelOutcome : std::uint8_t {
  Completed,        ///< the adversary committed the whole permutation
  HaltedEarly,      ///< the strategy halted mid-game
  BudgetExhausted,  ///< budget ran out before the D-values became correct
};

std::string_view to_string(DuelOutcome outcome);

struct DuelResult {
  int n = 0;
  Weight L = 0;
  std::string strategy;
  DuelOutcome outcome = DuelOutcome::Completed;
  /// Steps until the D-vector was correct, or all steps taken if it never was.
  std::int64_t total_ops = 0;
  std::vector<std::int64_t> per_phase_ops;
  std::vector<std::int64_t> phase_end_steps;
  Permutation pi;
  WeightAssignment l_pi;
  bool consistent = false;
  bool correct = false;
  Transcript transcript;
};

/// Plays `strategy` against a fresh adversary. When the game ends the
/// permutation is materialized, the transcript replayed on it, and the run
/// continues against the concrete instance until the D-vector is correct.
/// If the strategy halts early the D-state is reconstructed under the
/// canonical consistent completion.
DuelResult duel(Strategy& strategy, int n, std::optional<Weight> L = std::nullopt,
                std::optional<std::int64_t> budget = std::nullopt);

struct InvariantViolation {
  std::int64_t step = 0;
  int phase = 0;
  std::string property;
  std::string detail;
};

struct InvariantReport {
  std::int64_t checks = 0;
  std::vector<InvariantViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Post-hoc certification of a finished duel by replay under sampled
/// consistent permutations: answers stay truthful (I0/J0) and the D-values
/// at phase boundaries and sampled interior steps have the closed forms
/// (I1, I2, J1, J2.1-J2.3). Also checks that right before each phase-ending
/// step some vertex is still above its true distance, and that the final
/// permutation replays the whole transcript consistently.
InvariantReport check_invariants(const DuelResult& result, int samples, std::uint64_t seed);

}  // namespace relaxbound
