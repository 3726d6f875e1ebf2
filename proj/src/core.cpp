#include "relaxbound/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace relaxbound {

namespace {

Weight checked_add(Weight a, Weight b) {
  Weight out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("weight arithmetic overflow");
  return out;
}

Weight checked_mul(Weight a, Weight b) {
  Weight out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("weight arithmetic overflow");
  return out;
}

void require_odd(int n, const char* family) {
  if (n < 3 || n % 2 == 0) {
    throw InvalidInstance(std::string(family) + ": n must be odd and >= 3, got " + std::to_string(n));
  }
}

// Fills a symmetric hard instance: path edge weight, long-edge weight for
// tail index i even, L for odd i.
template <typename EvenLong>
WeightAssignment symmetric_from_permutation(std::span<const Vertex> pi, Weight path_edge,
                                            Weight L, EvenLong even_long) {
  const int n = static_cast<int>(pi.size());
  std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Weight value = 0;
      if (j == i + 1) {
        value = path_edge;
      } else if (i % 2 == 0) {
        value = even_long(i);
      } else {
        value = L;
      }
      w[static_cast<std::size_t>(pi[i]) * n + pi[j]] = value;
      w[static_cast<std::size_t>(pi[j]) * n + pi[i]] = value;
    }
  }
  return WeightAssignment(n, std::move(w));
}

}  // namespace

WeightAssignment::WeightAssignment(int n)
    : n_(n), weights_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 1) throw InvalidInstance("vertex count must be positive");
}

WeightAssignment::WeightAssignment(int n, std::vector<Weight> row_major)
    : n_(n), weights_(std::move(row_major)) {
  if (n < 1) throw InvalidInstance("vertex count must be positive");
  if (weights_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidInstance("expected " + std::to_string(n * n) + " weights, got " +
                          std::to_string(weights_.size()));
  }
  const Weight limit = kWeightCeiling / n;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const Weight w = (*this)(u, v);
      if (u == v) {
        if (w != 0) throw InvalidInstance("diagonal entry " + std::to_string(u) + " is non-zero");
        continue;
      }
      if (w > limit || w < -limit) {
        throw InvalidInstance("weight of edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") exceeds the overflow-safe range");
      }
      max_abs_ = std::max(max_abs_, w < 0 ? -w : w);
    }
  }
}

Potential::Potential(std::vector<Weight> phi) : phi_(std::move(phi)) {
  if (phi_.empty()) throw InvalidInstance("potential must cover at least one vertex");
  if (phi_[kSource] != 0) throw InvalidInstance("potential must vanish at the start vertex");
}

WeightAssignment delta_potential(const Potential& phi) {
  const int n = phi.size();
  std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) w[static_cast<std::size_t>(u) * n + v] = checked_add(phi[v], -phi[u]);
    }
  }
  return WeightAssignment(n, std::move(w));
}

WeightAssignment combine(const WeightAssignment& l, const Potential& phi, Weight c) {
  const int n = l.size();
  if (phi.size() != n) {
    throw InvalidInstance("potential covers " + std::to_string(phi.size()) +
                          " vertices, assignment has " + std::to_string(n));
  }
  std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const Weight mask = checked_mul(c, checked_add(phi[v], -phi[u]));
      w[static_cast<std::size_t>(u) * n + v] = checked_add(l(u, v), mask);
    }
  }
  return WeightAssignment(n, std::move(w));
}

Weight path_length(const WeightAssignment& l, std::span<const Vertex> path) {
  Weight total = 0;
  for (std::size_t i = 1; i < path.size(); ++i) total += l(path[i - 1], path[i]);
  return total;
}

DistanceVector true_distances(const WeightAssignment& l) {
  const int n = l.size();
  DistanceVector dist(static_cast<std::size_t>(n));
  dist[kSource] = 0;
  for (Vertex v = 1; v < n; ++v) dist[v] = l(kSource, v);

  auto sweep = [&] {
    bool changed = false;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        const Weight candidate = dist[u] + l(u, v);
        if (candidate < dist[v]) {
          dist[v] = candidate;
          changed = true;
        }
      }
    }
    return changed;
  };

  for (int round = 0; round < n; ++round) {
    if (!sweep()) return dist;
  }
  if (sweep()) throw NegativeCycle("instance contains a negative cycle reachable from s");
  return dist;
}

void check_permutation(std::span<const Vertex> pi) {
  const int n = static_cast<int>(pi.size());
  if (n == 0 || pi[0] != kSource) throw InvalidInstance("permutation must start with s = 0");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : pi) {
    if (v < 0 || v >= n || seen[v]) throw InvalidInstance("not a permutation of the vertex set");
    seen[v] = 1;
  }
}

WeightAssignment hard_det(std::span<const Vertex> pi, std::optional<Weight> L) {
  const int n = static_cast<int>(pi.size());
  require_odd(n, "hard_det");
  check_permutation(pi);
  const Weight length = L.value_or(default_det_length(n));
  if (length < default_det_length(n)) throw InvalidInstance("hard_det: L must be at least 5n");
  return symmetric_from_permutation(pi, 2, length,
                                    [&](int i) { return length - Weight{5} * i / 2; });
}

WeightAssignment hard_rand(std::span<const Vertex> pi, std::optional<Weight> L) {
  const int n = static_cast<int>(pi.size());
  require_odd(n, "hard_rand");
  check_permutation(pi);
  const Weight length = L.value_or(default_rand_length(n));
  if (length < default_rand_length(n)) throw InvalidInstance("hard_rand: L must be at least 5n^2");
  // (n + 1/2) * i with i even is n*i + i/2.
  return symmetric_from_permutation(pi, n, length,
                                    [&](int i) { return length - (Weight{n} * i + i / 2); });
}

}  // namespace relaxbound
