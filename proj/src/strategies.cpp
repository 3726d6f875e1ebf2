#include "relaxbound/strategies.hpp"

#include <array>
#include <numeric>

#include "relaxbound/rng.hpp"

namespace relaxbound {

namespace {

constexpr std::array kStrategyKinds{StrategyKind::BellmanFord, StrategyKind::Yen,
                               StrategyKind::BannisterEppstein, StrategyKind::DijkstraCmp,
                               StrategyKind::GuardedBF, StrategyKind::RandomFair};

class DijkstraCmp final : public Strategy {
 public:
  explicit DijkstraCmp(int n) : n_(n), settled_(static_cast<std::size_t>(n), 0) {}

  std::optional<Operation> next(Answer previous) override {
    if (awaiting_compare_) {
      awaiting_compare_ = false;
      if (previous == Answer::Yes) candidate_ = pending_;
    }
    for (;;) {
      if (selecting_) {
        while (scan_ < n_ && settled_[scan_]) ++scan_;
        if (scan_ < n_) {
          pending_ = scan_++;
          awaiting_compare_ = true;
          return Operation::d_query(pending_, candidate_);
        }
        settled_[candidate_] = 1;
        ++settled_count_;
        selecting_ = false;
        relax_to_ = 0;
      }
      while (relax_to_ < n_) {
        const Vertex v = relax_to_++;
        if (v != candidate_) return Operation::relax(candidate_, v);
      }
      if (settled_count_ == n_) return std::nullopt;
      candidate_ = 0;
      while (settled_[candidate_]) ++candidate_;
      scan_ = candidate_ + 1;
      selecting_ = true;
    }
  }

  KindMask kinds() const override { return kRelaxOnly | kind_bit(OpKind::DQuery); }
  std::string name() const override { return "dijkstra-cmp"; }

 private:
  int n_;
  std::vector<char> settled_;
  int settled_count_ = 0;
  bool selecting_ = true;
  bool awaiting_compare_ = false;
  Vertex candidate_ = 0;
  Vertex pending_ = 0;
  Vertex scan_ = 1;
  Vertex relax_to_ = 0;
};

class GuardedBF final : public Strategy {
 public:
  explicit GuardedBF(int n) : n_(n) {}

  std::optional<Operation> next(Answer previous) override {
    if (queried_) {
      queried_ = false;
      if (previous == Answer::Yes) {
        dirty_ = true;
        return Operation::relax(u_, v_);
      }
    }
    if (started_ && !advance()) return std::nullopt;
    started_ = true;
    queried_ = true;
    return Operation::edge_query(u_, v_);
  }

  KindMask kinds() const override { return kEdgeQueryModel; }
  std::string name() const override { return "guarded-bf"; }

 private:
  // Moves to the next edge; returns false once two clean sweeps completed.
  bool advance() {
    if (++v_ == u_) ++v_;
    if (v_ < n_) return true;
    if (++u_ < n_) {
      v_ = u_ == 0 ? 1 : 0;
      return true;
    }
    clean_sweeps_ = dirty_ ? 0 : clean_sweeps_ + 1;
    dirty_ = false;
    if (clean_sweeps_ == 2) return false;
    u_ = 0;
    v_ = 1;
    return true;
  }

  int n_;
  Vertex u_ = 0;
  Vertex v_ = 1;
  bool started_ = false;
  bool queried_ = false;
  bool dirty_ = false;
  int clean_sweeps_ = 0;
};

class RandomFair final : public Strategy {
 public:
  RandomFair(int n, std::uint64_t seed) : n_(n), rng_(seed) {}

  std::optional<Operation> next(Answer) override {
    const auto edge = rng_.below(static_cast<std::uint64_t>(n_) * (n_ - 1));
    const auto u = static_cast<Vertex>(edge / (n_ - 1));
    auto v = static_cast<Vertex>(edge % (n_ - 1));
    if (v >= u) ++v;
    return rng_.coin() ? Operation::edge_query(u, v) : Operation::relax(u, v);
  }

  KindMask kinds() const override { return kEdgeQueryModel; }
  std::string name() const override { return "random-fair"; }

 private:
  int n_;
  Rng rng_;
};

}  // namespace

std::string_view strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::BellmanFord:
      return "bellman-ford";
    case StrategyKind::Yen:
      return "yen";
    case StrategyKind::BannisterEppstein:
      return "bannister-eppstein";
    case StrategyKind::DijkstraCmp:
      return "dijkstra-cmp";
    case StrategyKind::GuardedBF:
      return "guarded-bf";
    case StrategyKind::RandomFair:
      return "random-fair";
  }
  return "?";
}

std::optional<StrategyKind> parse_strategy(std::string_view name) {
  for (StrategyKind kind : kStrategyKinds) {
    if (strategy_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::span<const StrategyKind> all_strategy_kinds() { return kStrategyKinds; }

bool is_edge_query_only(StrategyKind kind) { return kind != StrategyKind::DijkstraCmp; }

std::unique_ptr<Strategy> bellman_ford(int n) {
  std::vector<Operation> ops;
  ops.reserve(static_cast<std::size_t>(n - 1) * n * (n - 1));
  for (int round = 0; round + 1 < n; ++round) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v) ops.push_back(Operation::relax(u, v));
      }
    }
  }
  return std::make_unique<SequenceStrategy>("bellman-ford", std::move(ops));
}

std::vector<Operation> yen_sequence(std::span<const Vertex> order) {
  const int n = static_cast<int>(order.size());
  const int pass_pairs = (n + 1) / 2 + 1;
  std::vector<Operation> ops;
  ops.reserve(static_cast<std::size_t>(pass_pairs) * n * (n - 1));
  for (int pair = 0; pair < pass_pairs; ++pair) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) ops.push_back(Operation::relax(order[i], order[j]));
    }
    for (int i = n - 1; i >= 0; --i) {
      for (int j = 0; j < i; ++j) ops.push_back(Operation::relax(order[i], order[j]));
    }
  }
  return ops;
}

std::unique_ptr<Strategy> yen(int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return std::make_unique<SequenceStrategy>("yen", yen_sequence(order));
}

std::unique_ptr<Strategy> bannister_eppstein(int n, std::uint64_t seed) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(std::span<Vertex>(order));
  return std::make_unique<SequenceStrategy>("bannister-eppstein", yen_sequence(order));
}

std::unique_ptr<Strategy> dijkstra_cmp(int n) { return std::make_unique<DijkstraCmp>(n); }

std::unique_ptr<Strategy> guarded_bf(int n) { return std::make_unique<GuardedBF>(n); }

std::unique_ptr<Strategy> random_fair(int n, std::uint64_t seed) {
  return std::make_unique<RandomFair>(n, seed);
}

std::unique_ptr<Strategy> make_strategy(StrategyKind kind, int n, std::uint64_t seed) {
  switch (kind) {
    case StrategyKind::BellmanFord:
      return bellman_ford(n);
    case StrategyKind::Yen:
      return yen(n);
    case StrategyKind::BannisterEppstein:
      return bannister_eppstein(n, seed);
    case StrategyKind::DijkstraCmp:
      return dijkstra_cmp(n);
    case StrategyKind::GuardedBF:
      return guarded_bf(n);
    case StrategyKind::RandomFair:
      return random_fair(n, seed);
  }
  return nullptr;
}

StrategyFactory strategy_factory(StrategyKind kind, int n, std::uint64_t seed) {
  return [=] { return make_strategy(kind, n, seed); };
}

}  // namespace relaxbound
