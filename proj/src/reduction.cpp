#include "relaxbound/reduction.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "relaxbound/golomb.hpp"
#include "relaxbound/rng.hpp"

namespace relaxbound {

namespace {

class MaskedStrategy final : public Strategy {
 public:
  MaskedStrategy(std::unique_ptr<Strategy> inner, MaskParams params)
      : inner_(std::move(inner)), params_(std::move(params)) {}

  std::optional<Operation> next(Answer previous) override {
    std::optional<Operation> op = inner_->next(previous);
    while (op && (op->kind == OpKind::DQuery || op->kind == OpKind::WeightQuery)) {
      op = inner_->next(synthesize(*op));
    }
    return op;
  }

  KindMask kinds() const override { return inner_->kinds() & kEdgeQueryModel; }
  std::string name() const override { return "masked(" + inner_->name() + ")"; }

 private:
  Answer synthesize(const Operation& op) const {
    const auto& phi = params_.phi;
    if (op.kind == OpKind::DQuery) return from_bool(phi[op.u] < phi[op.v]);
    return from_bool(phi[op.v] - phi[op.u] < phi[op.y] - phi[op.x]);
  }

  std::unique_ptr<Strategy> inner_;
  MaskParams params_;
};

// Min and max length of simple paths from `start` to each vertex.
void extreme_path_lengths(const WeightAssignment& l, Vertex start, std::vector<Weight>& lo,
                          std::vector<Weight>& hi) {
  const int n = l.size();
  lo.assign(static_cast<std::size_t>(n), std::numeric_limits<Weight>::max());
  hi.assign(static_cast<std::size_t>(n), std::numeric_limits<Weight>::min());
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  auto visit = [&](auto&& self, Vertex at, Weight length) -> void {
    lo[at] = std::min(lo[at], length);
    hi[at] = std::max(hi[at], length);
    on_path[at] = 1;
    for (Vertex next = 0; next < n; ++next) {
      if (!on_path[next]) self(self, next, length + l(at, next));
    }
    on_path[at] = 0;
  };
  visit(visit, start, 0);
}

std::vector<Vertex> random_simple_path(int n, Vertex start, Rng& rng) {
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v) {
    if (v != start) rest.push_back(v);
  }
  rng.shuffle(std::span<Vertex>(rest));
  const auto extra = static_cast<std::size_t>(rng.between(0, n - 1));
  std::vector<Vertex> path{start};
  path.insert(path.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(extra));
  return path;
}

}  // namespace

Weight mask_constant(Weight lmax, int n) { return 2 * lmax * n + 1; }

MaskParams make_mask_params(int n, Weight lmax) {
  MaskParams params{golomb_potential(n), mask_constant(lmax, n)};
  if (!is_golomb(params.phi.values())) throw std::logic_error("mask potential is not a Golomb ruler");
  return params;
}

std::unique_ptr<Strategy> wrap(std::unique_ptr<Strategy> inner, MaskParams params) {
  if (!is_golomb(params.phi.values())) {
    throw std::invalid_argument("wrap: potential must induce pairwise distinct edge weights");
  }
  return std::make_unique<MaskedStrategy>(std::move(inner), std::move(params));
}

bool verify_p1(const WeightAssignment& l, const MaskParams& params) {
  const int n = l.size();
  const WeightAssignment masked = combine(l, params.phi, params.c);
  const WeightAssignment delta = delta_potential(params.phi);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a == b) continue;
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
          if (x == y || (a == x && b == y)) continue;
          if ((masked(a, b) < masked(x, y)) != (delta(a, b) < delta(x, y))) return false;
        }
      }
    }
  }
  return true;
}

bool verify_p2(const WeightAssignment& l, const MaskParams& params, std::int64_t path_budget, std::uint64_t seed) {
  const int n = l.size();
  const WeightAssignment masked = combine(l, params.phi, params.c);
  const auto& phi = params.phi;

  if (n <= 7) {
    // The biconditional holds for every pair iff, whenever phi[x] < phi[y],
    // the longest u-x path is shorter than the shortest u-y path.
    std::vector<Weight> lo;
    std::vector<Weight> hi;
    for (Vertex u = 0; u < n; ++u) {
      extreme_path_lengths(masked, u, lo, hi);
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
          if (x == y) continue;
          if (phi[x] < phi[y] && !(hi[x] < lo[y])) return false;
          if (phi[x] > phi[y] && lo[x] < hi[y]) return false;
        }
      }
    }
    return true;
  }

  Rng rng(seed);
  for (std::int64_t i = 0; i < path_budget; ++i) {
    const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    const std::vector<Vertex> px = random_simple_path(n, u, rng);
    const std::vector<Vertex> py = random_simple_path(n, u, rng);
    const Vertex x = px.back();
    const Vertex y = py.back();
    if (x == y) continue;
    if ((path_length(masked, px) < path_length(masked, py)) != (phi[x] < phi[y])) return false;
  }
  return true;
}

bool check_potential_oblivious(const StrategyFactory& make, const WeightAssignment& l, const Potential& phi) {
  const int n = l.size();
  const WeightAssignment shifted = combine(l, phi, 1);
  std::unique_ptr<Strategy> plain = make();
  std::unique_ptr<Strategy> moved = make();
  if ((plain->kinds() & ~kEdgeQueryModel) != 0) {
    throw ModelViolation(plain->name() + " is not an edge-query-only strategy");
  }
  ConcreteEnvironment env_plain(l);
  ConcreteEnvironment env_moved(shifted);
  const auto shift_holds = [&] {
    for (Vertex v = 0; v < n; ++v) {
      if (env_moved.state().d[v] != env_plain.state().d[v] + phi[v]) return false;
    }
    return true;
  };
  if (!shift_holds()) return false;

  Answer last_plain = Answer::Done;
  Answer last_moved = Answer::Done;
  const std::int64_t budget = default_budget(n);
  for (std::int64_t t = 0; t < budget; ++t) {
    const std::optional<Operation> a = plain->next(last_plain);
    const std::optional<Operation> b = moved->next(last_moved);
    if (a != b) return false;
    if (!a) return true;
    validate(*a, n);
    if ((plain->kinds() & kind_bit(a->kind)) == 0) {
      throw ModelViolation(plain->name() + " emitted undeclared operation " + to_string(*a));
    }
    last_plain = env_plain.answer(*a);
    last_moved = env_moved.answer(*b);
    if (last_plain != last_moved || !shift_holds()) return false;
  }
  return true;
}

DuelResult masked_duel(std::unique_ptr<Strategy> a, int n, std::optional<std::int64_t> budget) {
  const Weight L = default_det_length(n);
  std::unique_ptr<Strategy> b = wrap(std::move(a), make_mask_params(n, L));
  return duel(*b, n, L, budget);
}

}  // namespace relaxbound
