#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace relaxbound {

using Vertex = int;
using Weight = std::int64_t;
using Permutation = std::vector<Vertex>;
using DistanceVector = std::vector<Weight>;

/// The start vertex s.
inline constexpr Vertex kSource = 0;

/// Every stored weight satisfies |w| * n <= kWeightCeiling, so the length of
/// any simple path (and any D-value) fits in a signed 64-bit integer.
inline constexpr Weight kWeightCeiling = Weight{1} << 62;

class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NegativeCycle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense integer weights on the complete directed graph over [0, n).
/// Diagonal entries are stored as 0 and never read.
class WeightAssignment {
 public:
  WeightAssignment() = default;
  /// All-zero assignment.
  explicit WeightAssignment(int n);
  /// Row-major n*n weights; throws InvalidInstance on a non-zero diagonal,
  /// wrong length, or a weight outside the overflow-safe range.
  WeightAssignment(int n, std::vector<Weight> row_major);

  int size() const { return n_; }

  Weight operator()(Vertex u, Vertex v) const {
    return weights_[static_cast<std::size_t>(u) * n_ + v];
  }

  /// Largest absolute edge weight (lmax).
  Weight max_abs() const { return max_abs_; }

  std::span<const Weight> row_major() const { return weights_; }

  bool operator==(const WeightAssignment&) const = default;

 private:
  int n_ = 0;
  std::vector<Weight> weights_;
  Weight max_abs_ = 0;
};

/// Integer vertex labels with phi[s] = 0.
class Potential {
 public:
  Potential() = default;
  explicit Potential(std::vector<Weight> phi);

  int size() const { return static_cast<int>(phi_.size()); }
  Weight operator[](Vertex v) const { return phi_[static_cast<std::size_t>(v)]; }
  std::span<const Weight> values() const { return phi_; }

  static Potential zero(int n) { return Potential(std::vector<Weight>(static_cast<std::size_t>(n), 0)); }

 private:
  std::vector<Weight> phi_;
};

/// Path-independent assignment (u, v) -> phi[v] - phi[u].
WeightAssignment delta_potential(const Potential& phi);

/// l + c * delta_potential(phi), with overflow-checked arithmetic.
WeightAssignment combine(const WeightAssignment& l, const Potential& phi, Weight c);

/// Length of the vertex sequence `path` under `l`.
Weight path_length(const WeightAssignment& l, std::span<const Vertex> path);

/// Reference distances from s by n rounds of full relaxation sweeps.
/// Throws NegativeCycle if one more round still improves something.
DistanceVector true_distances(const WeightAssignment& l);

/// Validates that `pi` is a permutation of [0, n) starting at s.
void check_permutation(std::span<const Vertex> pi);

inline Weight default_det_length(int n) { return Weight{5} * n; }
inline Weight default_rand_length(int n) { return Weight{5} * n * n; }

/// Symmetric hard instance whose shortest-path tree is the Hamiltonian path
/// pi[0], pi[1], ...: path edges weigh 2, a long edge leaving pi[i] weighs
/// L - 5i/2 for even i and L for odd i. Requires odd n and L >= 5n.
WeightAssignment hard_det(std::span<const Vertex> pi, std::optional<Weight> L = std::nullopt);

/// Randomized-family variant: path edges weigh n, long edges leaving pi[i]
/// weigh L - (n + 1/2) i for even i and L for odd i. Requires odd n and
/// L >= 5n^2.
WeightAssignment hard_rand(std::span<const Vertex> pi, std::optional<Weight> L = std::nullopt);

}  // namespace relaxbound
