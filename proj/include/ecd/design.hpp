#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ecd/bitset.hpp"
#include "ecd/combinatorics.hpp"
#include "ecd/error.hpp"
#include "ecd/rational.hpp"

namespace ecd {

using Block = std::vector<int>;

/// A set system (V, B): v points 0..v-1 and a multiset of blocks.
///
/// Blocks are normalized at construction: each block sorted ascending, the
/// block list sorted lexicographically (duplicates kept adjacent, multiplicity
/// preserved). A block must be non-empty, duplicate-free, and within [0, v).
class Design {
public:
  Design(int v, std::vector<Block> blocks) : v_(v), blocks_(std::move(blocks)) {
    if (v_ < 0) throw Error("design: negative point count");
    for (auto& b : blocks_) {
      std::sort(b.begin(), b.end());
      if (b.empty()) throw Error("design: empty block");
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0 || b[i] >= v_)
          throw Error("design: point " + std::to_string(b[i]) + " outside [0, " +
                      std::to_string(v_) + ")");
        if (i > 0 && b[i] == b[i - 1])
          throw Error("design: repeated point " + std::to_string(b[i]) + " in a block");
      }
    }
    std::sort(blocks_.begin(), blocks_.end());
    cache_ = std::make_shared<Cache>();
  }

  int point_count() const { return v_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }

  /// One bitset of length v per block, built on first use and shared by copies.
  const std::vector<Bitset>& block_bits() const {
    std::call_once(cache_->built, [this] {
      cache_->bits.reserve(blocks_.size());
      for (const auto& b : blocks_) {
        Bitset bs(static_cast<std::size_t>(v_));
        for (int p : b) bs.set(static_cast<std::size_t>(p));
        cache_->bits.push_back(std::move(bs));
      }
    });
    return cache_->bits;
  }

  bool operator==(const Design& o) const { return v_ == o.v_ && blocks_ == o.blocks_; }

private:
  struct Cache {
    std::once_flag built;
    std::vector<Bitset> bits;
  };

  int v_ = 0;
  std::vector<Block> blocks_;
  std::shared_ptr<Cache> cache_;
};

/// Parameter tuple of a t-wise balanced design: strength t, order v,
/// admitted block sizes K, index lambda.
struct DesignParams {
  int t = 2;
  int v = 0;
  std::set<int> k_set;
  long long lambda = 1;

  DesignParams(int t_, int v_, std::set<int> k_set_, long long lambda_)
      : t(t_), v(v_), k_set(std::move(k_set_)), lambda(lambda_) {
    if (t < 1) throw Error("design parameters: t must be >= 1");
    if (lambda < 1) throw Error("design parameters: lambda must be >= 1");
    for (int k : k_set)
      if (k < t || k > v) throw Error("design parameters: block size outside [t, v]");
  }
};

struct Violation {
  std::string kind;  // "coverage" or "block_size"
  std::vector<int> subset;
  long long observed = 0;
  long long expected = 0;
};

/// Pass/fail evidence for design axioms. ok iff violations is empty;
/// truncated marks a capped violation list.
struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;
  bool truncated = false;
  std::map<std::string, Rational> derived;
};

/// Blocks containing each point (the replication numbers r_i).
inline std::vector<long long> replication_profile(const Design& d) {
  std::vector<long long> r(static_cast<std::size_t>(d.point_count()), 0);
  for (const auto& b : d.blocks())
    for (int p : b) ++r[static_cast<std::size_t>(p)];
  return r;
}

/// lambda_h = lambda * C(v-h, t-h) / C(k-h, t-h), the index of a t-(v,k,lambda)
/// design viewed as an h-design. Exact; query is_integer() on the result for
/// the integrality flag.
inline Rational lambda_h(int t, int v, int k, long long lambda, int h) {
  if (h < 0 || h > t || t > k || k > v)
    throw Error("lambda_h: need 0 <= h <= t <= k <= v");
  return Rational(lambda) * Rational(binomial(v - h, t - h)) / Rational(binomial(k - h, t - h));
}

namespace detail {

// Coverage counting per the counter-array scheme: one counter per colex rank
// of a t-subset, incremented for each t-subset of each block.
inline std::vector<long long> coverage_counts(const Design& d, int t) {
  const std::uint64_t n_subsets = combination_count(d.point_count(), t);
  if (n_subsets > 50'000'000) throw Error("validation: order too large for t-subset counting");
  std::vector<long long> counts(static_cast<std::size_t>(n_subsets), 0);
  for (const auto& b : d.blocks()) {
    if (static_cast<int>(b.size()) < t) continue;
    for_each_combination(static_cast<int>(b.size()), t, [&](const std::vector<int>& idx) {
      std::uint64_t rank = 0;
      for (std::size_t i = 0; i < idx.size(); ++i)
        rank += static_cast<std::uint64_t>(
            binomial(b[static_cast<std::size_t>(idx[i])], static_cast<long long>(i) + 1));
      ++counts[rank];
    });
  }
  return counts;
}

inline void add_replication_derived(const Design& d, int k_min, int k_max, long long lambda,
                                    ValidationReport& rep) {
  auto r = replication_profile(d);
  if (r.empty()) return;
  auto [mn, mx] = std::minmax_element(r.begin(), r.end());
  rep.derived["r_min"] = *mn;
  rep.derived["r_max"] = *mx;
  // Proposition-style bounds lambda(v-1)/(k_max-1) <= r_i <= lambda(v-1)/(k_min-1)
  if (k_min >= 2) {
    Rational lo(lambda * (d.point_count() - 1), k_max - 1);
    Rational hi(lambda * (d.point_count() - 1), k_min - 1);
    bool ok = Rational(*mn) >= lo && Rational(*mx) <= hi;
    rep.derived["replication_bounds_ok"] = ok ? 1 : 0;
  }
}

}  // namespace detail

/// Checks that every block has size k and every t-subset of points lies in
/// exactly lambda blocks (multiplicity counted). Violations are reported in
/// colex order of the offending subsets, capped at max_violations.
inline ValidationReport validate_t_design(const Design& d, int t, int k, long long lambda,
                                          int max_violations = 16) {
  if (t < 1 || t > k || k > d.point_count())
    throw Error("validate_t_design: need 1 <= t <= k <= v");
  if (lambda < 1) throw Error("validate_t_design: lambda must be >= 1");

  ValidationReport rep;
  auto push = [&](Violation v) {
    if (static_cast<int>(rep.violations.size()) < max_violations)
      rep.violations.push_back(std::move(v));
    else
      rep.truncated = true;
  };

  for (const auto& b : d.blocks())
    if (static_cast<int>(b.size()) != k)
      push({"block_size", b, static_cast<long long>(b.size()), static_cast<long long>(k)});

  auto counts = detail::coverage_counts(d, t);
  for (std::uint64_t rank = 0; rank < counts.size(); ++rank) {
    if (counts[rank] != lambda)
      push({"coverage", colex_unrank(rank, t, d.point_count()), counts[rank], lambda});
  }

  rep.ok = rep.violations.empty() && !rep.truncated;
  rep.derived["b"] = d.block_count();
  for (int h = 0; h <= t; ++h)
    rep.derived["lambda_" + std::to_string(h)] = lambda_h(t, d.point_count(), k, lambda, h);
  detail::add_replication_derived(d, k, k, lambda, rep);
  return rep;
}

/// Pairwise balanced design check: block sizes drawn from k_set, every pair
/// of distinct points in exactly lambda blocks.
inline ValidationReport validate_pbd(const Design& d, const std::set<int>& k_set, long long lambda,
                                     int max_violations = 16) {
  if (k_set.empty()) throw Error("validate_pbd: empty block size set");
  for (int k : k_set)
    if (k < 2) throw Error("validate_pbd: block sizes must be >= 2");
  if (lambda < 1) throw Error("validate_pbd: lambda must be >= 1");
  if (d.point_count() < 2) throw Error("validate_pbd: need at least 2 points");

  ValidationReport rep;
  auto push = [&](Violation v) {
    if (static_cast<int>(rep.violations.size()) < max_violations)
      rep.violations.push_back(std::move(v));
    else
      rep.truncated = true;
  };

  for (const auto& b : d.blocks())
    if (!k_set.count(static_cast<int>(b.size())))
      push({"block_size", b, static_cast<long long>(b.size()), *k_set.begin()});

  auto counts = detail::coverage_counts(d, 2);
  for (std::uint64_t rank = 0; rank < counts.size(); ++rank) {
    if (counts[rank] != lambda)
      push({"coverage", colex_unrank(rank, 2, d.point_count()), counts[rank], lambda});
  }

  rep.ok = rep.violations.empty() && !rep.truncated;
  rep.derived["b"] = d.block_count();
  detail::add_replication_derived(d, *k_set.begin(), *k_set.rbegin(), lambda, rep);
  return rep;
}

/// True iff no block occurs more than once.
inline bool is_simple(const Design& d) {
  const auto& bs = d.blocks();
  for (std::size_t i = 1; i < bs.size(); ++i)
    if (bs[i] == bs[i - 1]) return false;
  return true;
}

/// True iff no block is contained in a different block (repeated blocks count
/// as containment).
inline bool is_one_cover_free(const Design& d) {
  const auto& bits = d.block_bits();
  for (std::size_t i = 0; i < bits.size(); ++i)
    for (std::size_t j = 0; j < bits.size(); ++j)
      if (i != j && bits[i].is_subset_of(bits[j])) return false;
  return true;
}

/// Derived design at x: blocks through x with x removed, points above x
/// shifted down by one. Drops (t, v, k) each by one for a t-design.
inline Design derived_design(const Design& d, int x) {
  if (x < 0 || x >= d.point_count()) throw Error("derived_design: point out of range");
  std::vector<Block> out;
  for (const auto& b : d.blocks()) {
    if (!std::binary_search(b.begin(), b.end(), x)) continue;
    Block nb;
    nb.reserve(b.size() - 1);
    for (int p : b)
      if (p != x) nb.push_back(p > x ? p - 1 : p);
    out.push_back(std::move(nb));
  }
  return Design(d.point_count() - 1, std::move(out));
}

/// Supplementary design of a simple uniform design: all k-subsets of the
/// point set that are not blocks.
inline Design supplementary_design(const Design& d, int k) {
  if (k < 1 || k > d.point_count()) throw Error("supplementary_design: bad block size");
  if (!is_simple(d)) throw Error("supplementary_design: input must be simple");
  for (const auto& b : d.blocks())
    if (static_cast<int>(b.size()) != k)
      throw Error("supplementary_design: input must be uniform of size k");
  std::vector<Block> out;
  const auto& bs = d.blocks();
  for_each_combination(d.point_count(), k, [&](const std::vector<int>& c) {
    if (!std::binary_search(bs.begin(), bs.end(), c)) out.push_back(c);
  });
  return Design(d.point_count(), std::move(out));
}

/// Existence condition for a simple lambda-fold triple system of order v:
/// lambda <= v-2 and gcd(v-2, 6) divides lambda.
inline bool is_lambda_admissible(int v, long long lambda) {
  if (v < 3 || lambda < 1) throw Error("is_lambda_admissible: need v >= 3 and lambda >= 1");
  return lambda <= v - 2 && lambda % std::gcd<long long>(v - 2, 6) == 0;
}

}  // namespace ecd
