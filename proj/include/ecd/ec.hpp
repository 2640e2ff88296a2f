#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ecd/bitset.hpp"
#include "ecd/combinatorics.hpp"
#include "ecd/design.hpp"
#include "ecd/error.hpp"
#include "ecd/graph.hpp"
#include "ecd/parallel.hpp"

namespace ecd {

/// Outcome of an n-existential-closure check. On failure, witness_failure is
/// the enumeration-order first split (A, B) with no valid outside vertex:
/// n-subsets in colex order, splits of a subset in ascending mask order where
/// bit i set means element i of the sorted subset goes to A.
struct ECResult {
  bool holds = true;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness_failure;
  std::uint64_t checked_pairs = 0;

  bool operator==(const ECResult&) const = default;
};

namespace detail {

// Smallest failing split mask for subset t, or -1 when every split has a
// witness. stack[d] holds the candidate vertices compatible with the d
// highest-order bits already fixed; depth d decides the membership of
// t[n-1-d], zero branch (B) before one branch (A), so leaves appear in
// ascending mask order. An empty candidate set at depth d fails every mask
// below it, the least being the current prefix padded with zeros.
inline int first_failing_mask(const Graph& g, const std::vector<int>& t,
                              std::vector<Bitset>& stack, int depth, int prefix) {
  const int n = static_cast<int>(t.size());
  if (stack[static_cast<std::size_t>(depth)].none()) return prefix << (n - depth);
  if (depth == n) return -1;
  const Bitset& nb = g.neighbors(t[static_cast<std::size_t>(n - 1 - depth)]);
  auto& next = stack[static_cast<std::size_t>(depth) + 1];
  next = stack[static_cast<std::size_t>(depth)];
  next.and_not(nb);
  int r = first_failing_mask(g, t, stack, depth + 1, prefix << 1);
  if (r >= 0) return r;
  next = stack[static_cast<std::size_t>(depth)];
  next &= nb;
  return first_failing_mask(g, t, stack, depth + 1, (prefix << 1) | 1);
}

inline ECResult ec_result_from_hit(const std::optional<ScanHit>& hit, int n,
                                   std::uint64_t total_subsets) {
  ECResult r;
  if (!hit) {
    r.checked_pairs = total_subsets << n;
    return r;
  }
  r.holds = false;
  std::vector<int> a, b;
  for (int i = 0; i < n; ++i)
    ((hit->payload >> i) & 1 ? a : b).push_back(hit->subset[static_cast<std::size_t>(i)]);
  r.witness_failure = {std::move(a), std::move(b)};
  r.checked_pairs = (hit->rank << n) + static_cast<std::uint64_t>(hit->payload) + 1;
  return r;
}

}  // namespace detail

/// Brute-force n-e.c. decision. Requires n < vertex count; with n >= |V|
/// every split is unwitnessable for the trivial reason that no outside
/// vertex exists, which is reported as an error rather than a false.
inline ECResult is_n_ec(const Graph& g, int n) {
  if (n < 1) throw Error("is_n_ec: n must be >= 1");
  if (n >= g.n)
    throw Error("is_n_ec: n must be below the vertex count (no outside vertex can exist)");
  const std::uint64_t total = combination_count(g.n, n);
  auto hit = scan_combinations_first_hit(g.n, n, [&g, n] {
    std::vector<Bitset> stack(static_cast<std::size_t>(n) + 1,
                              Bitset(static_cast<std::size_t>(g.n)));
    return [&g, stack = std::move(stack)](const std::vector<int>& t) mutable -> int {
      stack[0] = Bitset::full(static_cast<std::size_t>(g.n));
      for (int v : t) stack[0].reset(static_cast<std::size_t>(v));
      return detail::first_failing_mask(g, t, stack, 0, 0);
    };
  });
  return detail::ec_result_from_hit(hit, n, total);
}

/// 2-e.c. via neighborhood identities: for each pair {u,v} the four witness
/// pools are the complement of N(u) u N(v), then N(u) \ N(v), then
/// N(v) \ N(u), then N(u) n N(v), each with u and v removed, in the split
/// order of is_n_ec. Agrees with is_n_ec(g, 2) exactly.
inline ECResult is_2_ec_fast(const Graph& g) {
  if (2 >= g.n)
    throw Error("is_n_ec: n must be below the vertex count (no outside vertex can exist)");
  std::uint64_t rank = 0;
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u, ++rank) {
      const Bitset& nu = g.neighbors(u);
      const Bitset& nv = g.neighbors(v);
      Bitset pools[4];
      pools[0] = ~(nu | nv);
      pools[1] = nu;
      pools[1].and_not(nv);
      pools[2] = nv;
      pools[2].and_not(nu);
      pools[3] = nu & nv;
      for (int mask = 0; mask < 4; ++mask) {
        pools[mask].reset(static_cast<std::size_t>(u));
        pools[mask].reset(static_cast<std::size_t>(v));
        if (pools[mask].none()) {
          ECResult r;
          r.holds = false;
          std::vector<int> a, b;
          ((mask & 1) ? a : b).push_back(u);
          ((mask & 2) ? a : b).push_back(v);
          r.witness_failure = {std::move(a), std::move(b)};
          r.checked_pairs = rank * 4 + static_cast<std::uint64_t>(mask) + 1;
          return r;
        }
      }
    }
  ECResult r;
  r.checked_pairs = rank * 4;
  return r;
}

struct XiResult {
  int value = 0;
  bool at_least = false;  // the cap stopped the climb with higher levels untested

  bool operator==(const XiResult&) const = default;
};

/// Existential closure number: the largest n with is_n_ec holding, or 0 when
/// the graph is not even 1-e.c. Level 1 is decided by degrees (every vertex
/// needs both a neighbor and a non-neighbor), level 2 by is_2_ec_fast, higher
/// levels by is_n_ec, climbing until a level fails, no outside vertex can
/// exist, or the cap binds.
inline XiResult xi(const Graph& g, int cap = 4) {
  if (cap < 1) throw Error("xi: cap must be >= 1");
  if (g.n == 0) return {0, false};
  for (int v = 0; v < g.n; ++v) {
    long long d = g.degree(v);
    if (d == 0 || d == g.n - 1) return {0, false};
  }
  int value = 1;
  while (value < cap) {
    const int next = value + 1;
    if (next >= g.n) return {value, false};
    const bool up = next == 2 ? is_2_ec_fast(g).holds : is_n_ec(g, next).holds;
    if (!up) return {value, false};
    value = next;
  }
  return {value, cap + 1 < g.n};
}

/// First pair of block indices (colex order) whose union meets every block of
/// the design, or nullopt. A 2-e.c. block intersection graph forces nullopt:
/// such a pair would empty the all-non-neighbor witness pool of is_2_ec_fast.
inline std::optional<std::pair<int, int>> find_dominating_union_pair(const Design& d) {
  const int b = d.block_count();
  const auto& bits = d.block_bits();
  for (int j = 1; j < b; ++j)
    for (int i = 0; i < j; ++i) {
      Bitset u = bits[static_cast<std::size_t>(i)] | bits[static_cast<std::size_t>(j)];
      bool dominates = true;
      for (int l = 0; l < b && dominates; ++l)
        dominates = bits[static_cast<std::size_t>(l)].intersects(u);
      if (dominates) return std::make_pair(i, j);
    }
  return std::nullopt;
}

}  // namespace ecd
