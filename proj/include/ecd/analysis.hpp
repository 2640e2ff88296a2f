#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecd/bitset.hpp"
#include "ecd/combinatorics.hpp"
#include "ecd/design.hpp"
#include "ecd/error.hpp"
#include "ecd/parallel.hpp"
#include "ecd/rational.hpp"

namespace ecd {

/// alphas[i] = number of blocks meeting the reference point set M in exactly
/// i points, i = 0..|M|.
struct IntersectionProfile {
  int m = 0;
  std::vector<long long> alphas;
};

inline IntersectionProfile intersection_profile(const Design& d, const std::vector<int>& m_points) {
  Bitset mb(static_cast<std::size_t>(d.point_count()));
  for (int p : m_points) {
    if (p < 0 || p >= d.point_count()) throw Error("intersection_profile: point out of range");
    if (mb.test(static_cast<std::size_t>(p))) throw Error("intersection_profile: repeated point");
    mb.set(static_cast<std::size_t>(p));
  }
  IntersectionProfile prof;
  prof.m = static_cast<int>(m_points.size());
  prof.alphas.assign(static_cast<std::size_t>(prof.m) + 1, 0);
  for (const auto& bb : d.block_bits()) ++prof.alphas[bb.count_and(mb)];
  return prof;
}

/// Intersection number alpha_i (0 <= i <= t) of an m-set M in a t-(v,k,lambda)
/// design, from the higher numbers alpha_{t+1}..alpha_m:
///
///   alpha_i = sum_{h=i}^{t} (-1)^{h+i} C(h,i) C(m,h) lambda_h
///           + (-1)^{t+i+1} sum_{h=t+1}^{m} C(h,i) C(h-i-1, h-t-1) alpha_h
///
/// Binomials use the zero-outside-range convention. The correction
/// coefficient C(h-i-1, h-t-1) is forced by inverting the double-counting
/// identities sum_{j>=h} C(j,h) alpha_j = C(m,h) lambda_h for h <= t; direct
/// intersection counts confirm it on every design in the test suite.
inline Rational kohler_alpha(int t, int v, int k, long long lambda, int m, int i,
                             const std::vector<long long>& high_alphas) {
  if (i < 0 || i > t) throw Error("kohler_alpha: need 0 <= i <= t");
  if (t > k || k > v) throw Error("kohler_alpha: need t <= k <= v");
  if (m <= t || m > v) throw Error("kohler_alpha: need t < m <= v");
  if (static_cast<int>(high_alphas.size()) != m - t)
    throw Error("kohler_alpha: expected " + std::to_string(m - t) +
                " higher intersection numbers");

  Rational acc;
  for (int h = i; h <= t; ++h) {
    Rational term = Rational(binomial(h, i) * binomial(m, h)) * lambda_h(t, v, k, lambda, h);
    acc += (h + i) % 2 == 0 ? term : -term;
  }
  Rational corr;
  for (int h = t + 1; h <= m; ++h)
    corr += Rational(binomial(h, i) * binomial(h - i - 1, h - t - 1) *
                     high_alphas[static_cast<std::size_t>(h - t - 1)]);
  return (t + i + 1) % 2 == 0 ? acc + corr : acc - corr;
}

/// Disjointness count for a 3-(v,4,lambda) design: given alpha_4 of an m-set,
/// the number of blocks avoiding it is
/// alpha_4 + (lambda/24)(v-2m)(v^2-2mv-3v+2m^2+2).
inline Rational qs_disjoint_margin(int v, long long lambda, int m, long long alpha4) {
  if (m < 4 || m > v) throw Error("qs_disjoint_margin: need 4 <= m <= v");
  long long lv = v, lm = m;
  Rational poly((lv - 2 * lm) * (lv * lv - 2 * lm * lv - 3 * lv + 2 * lm * lm + 2));
  return Rational(alpha4) + Rational(lambda, 24) * poly;
}

struct ConditionRecord {
  std::string name;
  std::string relation;  // lhs <relation> rhs
  Rational lhs;
  Rational rhs;
  bool satisfied = false;
};

struct ConditionReport {
  int v = 0;
  int k = 0;
  long long lambda = 1;
  int n = 1;
  std::vector<ConditionRecord> records;

  bool all_satisfied() const {
    for (const auto& r : records)
      if (!r.satisfied) return false;
    return true;
  }
};

/// Arithmetic feasibility screen for an n-e.c. block intersection graph of a
/// 2-(v,k,lambda) design. Only the records applicable to (lambda, n) are
/// emitted; each carries exact sides of its inequality.
inline ConditionReport condition_report(int v, int k, long long lambda, int n) {
  if (k < 2 || lambda < 1 || n < 1) throw Error("condition_report: need k >= 2, lambda >= 1, n >= 1");
  ConditionReport rep;
  rep.v = v;
  rep.k = k;
  rep.lambda = lambda;
  rep.n = n;

  auto add = [&](std::string name, std::string rel, Rational lhs, Rational rhs) {
    bool sat = rel == ">=" ? lhs >= rhs : rel == "<=" ? lhs <= rhs : lhs > rhs;
    rep.records.push_back({std::move(name), std::move(rel), lhs, rhs, sat});
  };

  add("order_lower_bound", ">=", Rational(v), Rational((n + 1ll) * k));
  if (lambda == 1) add("steiner_n_upper", "<=", Rational(n), Rational(k));
  if (lambda >= 2) add("fold_n_upper", "<=", Rational(n), Rational((k + 1) / 2));
  if (lambda == 1) add("steiner_2ec_threshold", ">=", Rational(v), Rational(1ll * k * k + k - 1));
  if (n >= 3) {
    long long k2 = 1ll * k * k, k3 = k2 * k, k4 = k3 * k;
    Rational rhs(lambda * k4 - lambda * n * k3 + (lambda + 1) * (n - 1) * k2 - 1ll * n * k + k + 1);
    add("three_ec_order_upper", "<=", Rational(v), rhs);
  }
  add("pbd_2ec_sufficient", ">", Rational(v), Rational(2ll * k * (k - 1) + 1));
  return rep;
}

/// First w-subset of points (colex order) whose interior blocks form exactly
/// a 2-(w,k,lambda) design, or nullopt. Interior means every point of the
/// block lies in the subset.
inline std::optional<std::vector<int>> find_sub_system(const Design& d, int w, int k,
                                                       long long lambda) {
  if (w < 0 || w > d.point_count()) throw Error("find_sub_system: need 0 <= w <= v");
  if (k < 2 || lambda < 1) throw Error("find_sub_system: need k >= 2, lambda >= 1");
  if (w < 2 || k > w) return std::nullopt;
  const auto& bits = d.block_bits();
  const int v = d.point_count();

  auto hit = scan_combinations_first_hit(v, w, [&] {
    std::vector<int> pos(static_cast<std::size_t>(v), -1);
    std::vector<long long> pair_count(static_cast<std::size_t>(w) * static_cast<std::size_t>(w));
    Bitset hb(static_cast<std::size_t>(v));
    return [&, pos, pair_count, hb](const std::vector<int>& h) mutable -> int {
      for (std::size_t i = 0; i < hb.size(); ++i) hb.reset(i);
      for (std::size_t i = 0; i < h.size(); ++i) {
        hb.set(static_cast<std::size_t>(h[i]));
        pos[static_cast<std::size_t>(h[i])] = static_cast<int>(i);
      }
      std::fill(pair_count.begin(), pair_count.end(), 0);
      bool ok = true;
      for (int l = 0; l < d.block_count() && ok; ++l) {
        if (!bits[static_cast<std::size_t>(l)].is_subset_of(hb)) continue;
        const auto& blk = d.block(l);
        if (static_cast<int>(blk.size()) != k) {
          ok = false;
          break;
        }
        // blk and h are both sorted, so pos is increasing along blk and every
        // pair lands in the upper triangle
        for (std::size_t a = 0; a < blk.size(); ++a)
          for (std::size_t b = a + 1; b < blk.size(); ++b)
            ++pair_count[static_cast<std::size_t>(pos[static_cast<std::size_t>(blk[a])]) *
                             static_cast<std::size_t>(w) +
                         static_cast<std::size_t>(pos[static_cast<std::size_t>(blk[b])])];
      }
      if (ok)
        for (int a = 0; a < w && ok; ++a)
          for (int b = a + 1; b < w; ++b)
            if (pair_count[static_cast<std::size_t>(a) * static_cast<std::size_t>(w) +
                           static_cast<std::size_t>(b)] != lambda) {
              ok = false;
              break;
            }
      for (int p : h) pos[static_cast<std::size_t>(p)] = -1;
      return ok ? 0 : -1;
    };
  });
  if (!hit) return std::nullopt;
  return hit->subset;
}

}  // namespace ecd
