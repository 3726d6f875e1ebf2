#include "relaxbound/golomb.hpp"

#include <algorithm>
#include <stdexcept>

namespace relaxbound {

std::int64_t least_prime_at_least(std::int64_t n) {
  if (n <= 2) return 2;
  // Bertrand: some prime lies in [n, 2n).
  const std::int64_t limit = 2 * n;
  std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  for (std::int64_t p = n; p <= limit; ++p) {
    if (!composite[p]) return p;
  }
  throw std::logic_error("no prime found below 2n");
}

Ruler erdos_turan_ruler(int n) {
  if (n < 1) throw std::invalid_argument("ruler needs at least one mark");
  const std::int64_t p = least_prime_at_least(n);
  Ruler marks(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) marks[i] = 2 * p * i + (i * i) % p;
  return marks;
}

bool is_golomb(std::span<const Weight> marks) {
  if (marks.size() < 2) return true;
  std::vector<Weight> sorted(marks.begin(), marks.end());
  std::sort(sorted.begin(), sorted.end());
  // A repeated mark gives the difference 0 twice.
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  // With distinct marks, ordered differences are distinct iff the positive
  // ones are.
  const Weight span = sorted.back() - sorted.front();
  const std::size_t k = sorted.size();
  if (span <= Weight{1} << 28) {
    std::vector<bool> seen(static_cast<std::size_t>(span) + 1, false);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const auto d = static_cast<std::size_t>(sorted[j] - sorted[i]);
        if (seen[d]) return false;
        seen[d] = true;
      }
    }
    return true;
  }
  std::vector<Weight> diffs;
  diffs.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) diffs.push_back(sorted[j] - sorted[i]);
  }
  std::sort(diffs.begin(), diffs.end());
  return std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end();
}

Potential golomb_potential(int n) { return Potential(erdos_turan_ruler(n)); }

}  // namespace relaxbound
