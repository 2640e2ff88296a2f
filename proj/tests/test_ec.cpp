#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <vector>

#include "ecd/constructions.hpp"
#include "ecd/ec.hpp"
#include "ecd/graph.hpp"
#include "ecd/rng.hpp"

using ecd::ECResult;
using ecd::Error;
using ecd::Graph;
using ecd::XiResult;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// 3x3 rook's graph: cells of a grid, adjacent when they share a row or column.
// It is strongly regular (9,4,1,2) and the smallest graph whose pairs all have
// the four witness types.
Graph rook9() {
  Graph g(9);
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      if (a / 3 == b / 3 || a % 3 == b % 3) g.add_edge(a, b);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph random_graph(ecd::Rng& r, int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (r() & 1) g.add_edge(a, b);
  return g;
}

// Reference decision by brute force over subsets, splits, and outside
// vertices, with no shared enumeration machinery.
bool reference_n_ec(const Graph& g, int n) {
  for (unsigned subset = 0; subset < (1u << g.n); ++subset) {
    if (std::popcount(subset) != n) continue;
    std::vector<int> t;
    for (int v = 0; v < g.n; ++v)
      if (subset >> v & 1) t.push_back(v);
    for (unsigned split = 0; split < (1u << n); ++split) {
      bool witnessed = false;
      for (int z = 0; z < g.n && !witnessed; ++z) {
        if (subset >> z & 1) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
          ok = g.has_edge(z, t[static_cast<std::size_t>(i)]) == bool(split >> i & 1);
        witnessed = ok;
      }
      if (!witnessed) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("closure levels of small named graphs") {
  REQUIRE(ecd::is_n_ec(cycle(5), 1).holds);
  REQUIRE_FALSE(ecd::is_n_ec(cycle(5), 2).holds);
  REQUIRE_FALSE(ecd::is_n_ec(petersen(), 2).holds);  // adjacent pairs have no common neighbor
  REQUIRE(ecd::is_n_ec(rook9(), 2).holds);
  REQUIRE_FALSE(ecd::is_n_ec(rook9(), 3).holds);
}

TEST_CASE("failure witnesses follow the documented enumeration order") {
  // complete graph: the very first query (vertex 0 as a non-neighbor) fails
  ECResult r = ecd::is_n_ec(ecd::complement(Graph(4)), 1);
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.witness_failure.has_value());
  REQUIRE(r.witness_failure->first.empty());
  REQUIRE(r.witness_failure->second == std::vector<int>{0});
  REQUIRE(r.checked_pairs == 1);

  // empty graph: the non-neighbor branch passes, the neighbor branch fails
  ECResult e = ecd::is_n_ec(Graph(4), 1);
  REQUIRE_FALSE(e.holds);
  REQUIRE(e.witness_failure->first == std::vector<int>{0});
  REQUIRE(e.witness_failure->second.empty());
  REQUIRE(e.checked_pairs == 2);

  // pentagon at level 2: pair {0,1} fails last (common neighborhood empty)
  ECResult c = ecd::is_n_ec(cycle(5), 2);
  REQUIRE_FALSE(c.holds);
  REQUIRE(c.witness_failure->first == std::vector<int>{0, 1});
  REQUIRE(c.witness_failure->second.empty());
  REQUIRE(c.checked_pairs == 4);
}

TEST_CASE("work counters cover the full space on success") {
  REQUIRE(ecd::is_n_ec(cycle(5), 1).checked_pairs == 5 * 2);
  REQUIRE(ecd::is_n_ec(rook9(), 2).checked_pairs == 36 * 4);
  REQUIRE(ecd::is_2_ec_fast(rook9()).checked_pairs == 36 * 4);
}

TEST_CASE("pair identity shortcut agrees with the exhaustive check") {
  REQUIRE(ecd::is_2_ec_fast(cycle(5)) == ecd::is_n_ec(cycle(5), 2));
  REQUIRE(ecd::is_2_ec_fast(rook9()) == ecd::is_n_ec(rook9(), 2));

  ecd::Rng r(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(ecd::bounded(r, 7));
    Graph g = random_graph(r, n);
    INFO("trial " << trial << " on " << n << " vertices");
    REQUIRE(ecd::is_2_ec_fast(g) == ecd::is_n_ec(g, 2));
  }
}

TEST_CASE("decisions match a brute-force reference") {
  ecd::Rng r(2718);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 5 + static_cast<int>(ecd::bounded(r, 8));
    Graph g = random_graph(r, n);
    INFO("trial " << trial << " on " << n << " vertices");
    for (int level = 1; level <= 3; ++level)
      REQUIRE(ecd::is_n_ec(g, level).holds == reference_n_ec(g, level));
  }
  REQUIRE(ecd::is_n_ec(rook9(), 2).holds == reference_n_ec(rook9(), 2));
  REQUIRE(ecd::is_n_ec(rook9(), 3).holds == reference_n_ec(rook9(), 3));
}

TEST_CASE("closure checks demand an outside vertex") {
  REQUIRE_THROWS_AS(ecd::is_n_ec(cycle(5), 0), Error);
  REQUIRE_THROWS_AS(ecd::is_n_ec(cycle(5), 5), Error);
  REQUIRE_THROWS_AS(ecd::is_2_ec_fast(Graph(2)), Error);
}

TEST_CASE("closure number climbs until a level fails") {
  REQUIRE(ecd::xi(cycle(5)) == XiResult{1, false});
  REQUIRE(ecd::xi(rook9()) == XiResult{2, false});
  REQUIRE(ecd::xi(petersen()) == XiResult{1, false});

  // degree extremes kill level 1
  REQUIRE(ecd::xi(ecd::complement(Graph(4))) == XiResult{0, false});
  REQUIRE(ecd::xi(Graph(4)) == XiResult{0, false});
  REQUIRE(ecd::xi(Graph(0)) == XiResult{0, false});

  // the cap reports a lower bound
  REQUIRE(ecd::xi(rook9(), 1) == XiResult{1, true});
  REQUIRE(ecd::xi(rook9(), 2) == XiResult{2, true});
  REQUIRE(ecd::xi(rook9(), 3) == XiResult{2, false});
  REQUIRE_THROWS_AS(ecd::xi(rook9(), 0), Error);
}

TEST_CASE("dominating block pairs appear exactly when 2-e.c. fails upstream") {
  // any two planes of the order-8 quadruple system cover at least 6 points,
  // and no block fits in the remaining 2
  auto pair = ecd::find_dominating_union_pair(ecd::sqs8());
  REQUIRE(pair.has_value());
  REQUIRE(*pair == std::make_pair(0, 1));

  // a 2-e.c. block intersection graph leaves the all-non-neighbor pool alive
  REQUIRE_FALSE(ecd::find_dominating_union_pair(ecd::netto13()).has_value());
}
