#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace ecd {

/// mt19937_64 keeps seeded runs reproducible across platforms; the helpers
/// below avoid std::uniform_int_distribution / std::shuffle, whose output is
/// implementation-defined.
using Rng = std::mt19937_64;

/// Unbiased draw from [0, n) by rejection.
inline std::uint64_t bounded(Rng& g, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    std::uint64_t x = g();
    if (x < limit) return x % n;
  }
}

/// Fisher-Yates permutation of [0, v).
inline std::vector<int> random_permutation_images(Rng& g, int v) {
  std::vector<int> p(static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int i = v - 1; i > 0; --i) {
    auto j = static_cast<std::size_t>(bounded(g, static_cast<std::uint64_t>(i) + 1));
    std::swap(p[static_cast<std::size_t>(i)], p[j]);
  }
  return p;
}

/// Uniform m-subset of [0, n), returned sorted ascending.
inline std::vector<int> random_subset(Rng& g, int n, int m) {
  // partial Fisher-Yates on an index pool
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto j = static_cast<std::size_t>(i) +
             static_cast<std::size_t>(bounded(g, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    out.push_back(pool[static_cast<std::size_t>(i)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ecd
