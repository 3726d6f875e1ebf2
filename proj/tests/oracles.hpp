#pragma once

// Test-only reference computations. None of these share code with the
// library paths they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include "relaxbound/core.hpp"
#include "relaxbound/rng.hpp"

namespace oracle {

using relaxbound::Vertex;
using relaxbound::Weight;
using relaxbound::WeightAssignment;

/// Calls visit(path, length) for every simple path starting at `start`,
/// including the one-vertex path.
inline void for_each_simple_path(const WeightAssignment& l, Vertex start,
                                 const std::function<void(const std::vector<Vertex>&, Weight)>& visit) {
  const int n = l.size();
  std::vector<Vertex> path{start};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[start] = 1;
  std::function<void(Weight)> rec = [&](Weight length) {
    visit(path, length);
    for (Vertex w = 0; w < n; ++w) {
      if (used[w]) continue;
      const Weight step = l(path.back(), w);
      used[w] = 1;
      path.push_back(w);
      rec(length + step);
      path.pop_back();
      used[w] = 0;
    }
  };
  rec(0);
}

/// Minimum over all simple paths from s.
inline std::vector<Weight> brute_force_distances(const WeightAssignment& l) {
  std::vector<Weight> best(static_cast<std::size_t>(l.size()), std::numeric_limits<Weight>::max());
  for_each_simple_path(l, relaxbound::kSource, [&](const std::vector<Vertex>& p, Weight len) {
    best[p.back()] = std::min(best[p.back()], len);
  });
  return best;
}

/// All lengths of simple s->v paths, per v.
inline std::vector<std::set<Weight>> simple_path_lengths_from_source(const WeightAssignment& l) {
  std::vector<std::set<Weight>> out(static_cast<std::size_t>(l.size()));
  for_each_simple_path(l, relaxbound::kSource,
                       [&](const std::vector<Vertex>& p, Weight len) { out[p.back()].insert(len); });
  return out;
}

/// Enumerates every simple cycle (as a path closed back to its start).
inline bool has_negative_cycle(const WeightAssignment& l) {
  bool found = false;
  for (Vertex start = 0; start < l.size() && !found; ++start) {
    for_each_simple_path(l, start, [&](const std::vector<Vertex>& p, Weight len) {
      if (p.size() >= 2 && len + l(p.back(), start) < 0) found = true;
    });
  }
  return found;
}

inline WeightAssignment random_instance(int n, Weight lo, Weight hi, relaxbound::Rng& rng) {
  std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) w[static_cast<std::size_t>(u) * n + v] = rng.between(lo, hi);
    }
  }
  return WeightAssignment(n, std::move(w));
}

/// Random instance with weights in [-10, 10] and no negative cycle. Small n
/// uses rejection from uniform weights; larger n (where rejection almost
/// never succeeds) uses w + delta(psi) with w in [0, 5] and psi in [0, 5],
/// whose cycles all have non-negative length.
inline WeightAssignment random_valid_instance(int n, relaxbound::Rng& rng) {
  if (n <= 4) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      WeightAssignment l = random_instance(n, -10, 10, rng);
      if (!has_negative_cycle(l)) return l;
    }
  }
  std::vector<Weight> psi(static_cast<std::size_t>(n));
  for (auto& p : psi) p = rng.between(0, 5);
  std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) w[static_cast<std::size_t>(u) * n + v] = rng.between(0, 5) + psi[v] - psi[u];
    }
  }
  return WeightAssignment(n, std::move(w));
}

/// Random permutation starting at s.
inline std::vector<Vertex> random_rooted_permutation(int n, relaxbound::Rng& rng) {
  std::vector<Vertex> pi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pi[i] = i;
  for (int i = n - 1; i > 1; --i) std::swap(pi[i], pi[1 + rng.below(static_cast<std::uint64_t>(i))]);
  return pi;
}

}  // namespace oracle
