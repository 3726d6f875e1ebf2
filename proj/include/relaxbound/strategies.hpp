#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relaxbound/machine.hpp"

namespace relaxbound {

enum class StrategyKind : std::uint8_t {
  BellmanFord,
  Yen,
  BannisterEppstein,
  DijkstraCmp,
  GuardedBF,
  RandomFair,
};

/// CLI names: bellman-ford, yen, bannister-eppstein, dijkstra-cmp,
/// guarded-bf, random-fair.
std::string_view strategy_name(StrategyKind kind);
std::optional<StrategyKind> parse_strategy(std::string_view name);
std::span<const StrategyKind> all_strategy_kinds();

/// Kinds that only emit relaxations and edge queries.
bool is_edge_query_only(StrategyKind kind);

/// Fixed, answer-independent operation list.
class SequenceStrategy final : public Strategy {
 public:
  SequenceStrategy(std::string name, std::vector<Operation> ops)
      : name_(std::move(name)), ops_(std::move(ops)) {}

  std::optional<Operation> next(Answer) override {
    if (pos_ == ops_.size()) return std::nullopt;
    return ops_[pos_++];
  }
  KindMask kinds() const override { return kRelaxOnly; }
  std::string name() const override { return name_; }

  std::span<const Operation> sequence() const { return ops_; }

 private:
  std::string name_;
  std::vector<Operation> ops_;
  std::size_t pos_ = 0;
};

/// n-1 rounds relaxing every edge in lexicographic order.
std::unique_ptr<Strategy> bellman_ford(int n);

/// Yen's ordering for vertex order 0..n-1: ceil(n/2)+1 pass pairs, each a
/// forward pass (u < v, ascending tails) then a backward pass (u > v,
/// descending tails).
std::unique_ptr<Strategy> yen(int n);

/// Yen's scheme over a uniformly random vertex order drawn from `seed`.
std::unique_ptr<Strategy> bannister_eppstein(int n, std::uint64_t seed);

/// Yen's scheme over an explicit vertex order.
std::vector<Operation> yen_sequence(std::span<const Vertex> order);

/// Comparison-based Dijkstra: selects the minimum-D unsettled vertex with a
/// linear scan of D-queries, then relaxes all of its outgoing edges.
std::unique_ptr<Strategy> dijkstra_cmp(int n);

/// Sweeps edges lexicographically, relaxing an edge only after a positive
/// edge query; halts after two consecutive sweeps with no positive answer.
std::unique_ptr<Strategy> guarded_bf(int n);

/// Each step draws a uniform random edge and either queries or relaxes it.
/// Never halts on its own.
std::unique_ptr<Strategy> random_fair(int n, std::uint64_t seed);

std::unique_ptr<Strategy> make_strategy(StrategyKind kind, int n, std::uint64_t seed = 0);

StrategyFactory strategy_factory(StrategyKind kind, int n, std::uint64_t seed = 0);

}  // namespace relaxbound
