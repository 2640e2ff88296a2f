#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "ecd/bitset.hpp"
#include "ecd/design.hpp"
#include "ecd/error.hpp"

namespace ecd {

/// Undirected simple graph as dense bitset adjacency rows. Vertex labels for
/// graphs built from a Design are block indices in normalized order.
struct Graph {
  int n = 0;
  std::vector<Bitset> adj;

  Graph() = default;
  explicit Graph(int vertex_count) {
    if (vertex_count < 0) throw Error("graph: negative vertex count");
    n = vertex_count;
    adj.assign(static_cast<std::size_t>(vertex_count), Bitset(static_cast<std::size_t>(vertex_count)));
  }

  void add_edge(int u, int v) {
    if (u == v) throw Error("graph: self-loop");
    adj[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  }

  bool has_edge(int u, int v) const {
    return adj[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v));
  }

  const Bitset& neighbors(int v) const { return adj[static_cast<std::size_t>(v)]; }
  long long degree(int v) const {
    return static_cast<long long>(adj[static_cast<std::size_t>(v)].count());
  }

  long long edge_count() const {
    long long twice = 0;
    for (const auto& row : adj) twice += static_cast<long long>(row.count());
    return twice / 2;
  }

  bool is_symmetric_irreflexive() const {
    for (int u = 0; u < n; ++u) {
      if (adj[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(u))) return false;
      for (int v = u + 1; v < n; ++v)
        if (has_edge(u, v) != has_edge(v, u)) return false;
    }
    return true;
  }

  bool operator==(const Graph& o) const = default;
};

/// Flattened b x b matrix of pairwise block intersection sizes; entry
/// (i,j) at i*b+j. Shared by S-graph builders to avoid recomputing.
inline std::vector<std::uint8_t> intersection_counts(const Design& d) {
  const int b = d.block_count();
  const auto& bits = d.block_bits();
  std::vector<std::uint8_t> m(static_cast<std::size_t>(b) * static_cast<std::size_t>(b), 0);
  for (int i = 0; i < b; ++i)
    for (int j = i; j < b; ++j) {
      auto c = static_cast<std::uint8_t>(
          bits[static_cast<std::size_t>(i)].count_and(bits[static_cast<std::size_t>(j)]));
      m[static_cast<std::size_t>(i) * static_cast<std::size_t>(b) + static_cast<std::size_t>(j)] = c;
      m[static_cast<std::size_t>(j) * static_cast<std::size_t>(b) + static_cast<std::size_t>(i)] = c;
    }
  return m;
}

/// Edge {i,j} iff the intersection size of blocks i and j lies in s.
inline Graph s_big_from_counts(const std::vector<std::uint8_t>& counts, int b,
                               const std::set<int>& s) {
  Graph g(b);
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j)
      if (s.count(static_cast<int>(
              counts[static_cast<std::size_t>(i) * static_cast<std::size_t>(b) +
                     static_cast<std::size_t>(j)])))
        g.add_edge(i, j);
  return g;
}

inline Graph build_s_big(const Design& d, const std::set<int>& s) {
  return s_big_from_counts(intersection_counts(d), d.block_count(), s);
}

/// Block intersection graph: edge iff the blocks share at least one point.
inline Graph build_big(const Design& d) {
  const int b = d.block_count();
  const auto& bits = d.block_bits();
  Graph g(b);
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j)
      if (bits[static_cast<std::size_t>(i)].intersects(bits[static_cast<std::size_t>(j)]))
        g.add_edge(i, j);
  return g;
}

inline Graph complement(const Graph& g) {
  Graph out(g.n);
  for (int v = 0; v < g.n; ++v) {
    out.adj[static_cast<std::size_t>(v)] = ~g.adj[static_cast<std::size_t>(v)];
    out.adj[static_cast<std::size_t>(v)].reset(static_cast<std::size_t>(v));
  }
  return out;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> labels;  // labels[i] = vertex in the parent graph
};

/// Subgraph on the given vertices, re-indexed in ascending original order.
inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> labels = vertices;
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= g.n) throw Error("induced_subgraph: vertex out of range");
    if (i > 0 && labels[i] == labels[i - 1]) throw Error("induced_subgraph: repeated vertex");
  }
  Graph out(static_cast<int>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (g.has_edge(labels[i], labels[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return {std::move(out), std::move(labels)};
}

struct DegreeStats {
  int n = 0;
  long long min_degree = 0;
  long long max_degree = 0;
  bool is_connected = true;
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.n = g.n;
  if (g.n == 0) return s;
  s.min_degree = s.max_degree = g.degree(0);
  for (int v = 1; v < g.n; ++v) {
    long long d = g.degree(v);
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
  }
  Bitset visited(static_cast<std::size_t>(g.n));
  Bitset frontier(static_cast<std::size_t>(g.n));
  frontier.set(0);
  while (frontier.any()) {
    visited |= frontier;
    Bitset next(static_cast<std::size_t>(g.n));
    for (std::size_t v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v))
      next |= g.adj[v];
    next.and_not(visited);
    frontier = std::move(next);
  }
  s.is_connected = visited.count() == static_cast<std::size_t>(g.n);
  return s;
}

}  // namespace ecd
