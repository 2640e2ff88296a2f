#pragma once

#include <cstdint>
#include <vector>

#include "ecd/error.hpp"

namespace ecd {

/// Binomial coefficient with the zero-outside-range convention:
/// C(n,k) = 0 whenever k < 0, n < 0, or k > n. Exact, overflow-checked.
inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact at each step: r is C(n-k+i, i)
    if (r > static_cast<__int128>(INT64_MAX)) throw Error("binomial coefficient overflow");
  }
  return static_cast<long long>(r);
}

inline std::uint64_t combination_count(int n, int k) {
  long long c = binomial(n, k);
  return static_cast<std::uint64_t>(c);
}

/// Colex (combinadic) rank of an ascending k-subset: sum of C(c_i, i+1).
inline std::uint64_t colex_rank(const std::vector<int>& subset) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i)
    r += static_cast<std::uint64_t>(binomial(subset[i], static_cast<long long>(i) + 1));
  return r;
}

/// Inverse of colex_rank for k-subsets of [0, n).
inline std::vector<int> colex_unrank(std::uint64_t rank, int k, int n) {
  std::vector<int> out(static_cast<std::size_t>(k));
  int hi = n;
  for (int i = k; i >= 1; --i) {
    int c = hi - 1;
    while (c >= i && static_cast<std::uint64_t>(binomial(c, i)) > rank) --c;
    if (c < i - 1) throw Error("colex_unrank: rank out of range");
    out[static_cast<std::size_t>(i) - 1] = c;
    rank -= static_cast<std::uint64_t>(binomial(c, i));
    hi = c;
  }
  if (rank != 0) throw Error("colex_unrank: rank out of range");
  return out;
}

/// Advances an ascending subset to its colex successor among subsets of
/// [0, n_items). Returns false (leaving the subset wrapped to the first one)
/// after the last subset.
inline bool colex_next(std::vector<int>& c, int n_items) {
  const int k = static_cast<int>(c.size());
  for (int i = 0; i < k; ++i) {
    int limit = (i + 1 < k) ? c[static_cast<std::size_t>(i) + 1] : n_items;
    if (c[static_cast<std::size_t>(i)] + 1 < limit) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j;
      return true;
    }
  }
  for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(j)] = j;
  return false;
}

/// Visits every k-subset of [0, n) in colex order.
template <class Fn>
void for_each_combination(int n, int k, Fn fn) {
  if (k < 0 || k > n) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  do {
    fn(static_cast<const std::vector<int>&>(c));
  } while (colex_next(c, n));
}

}  // namespace ecd
