#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ecd/combinatorics.hpp"
#include "ecd/design.hpp"
#include "ecd/error.hpp"
#include "ecd/rng.hpp"

namespace ecd {

struct Permutation {
  std::vector<int> images;

  explicit Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
    std::vector<bool> seen(images.size(), false);
    for (int x : images) {
      if (x < 0 || x >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(x)])
        throw Error("permutation: images are not a bijection");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[static_cast<std::size_t>(x)]; }
};

/// Result of developing base blocks over Z_v. orbit_lengths[i] is the number
/// of distinct translates of base block i; a value below v means that orbit
/// is short and its translates repeat in the block multiset.
struct CyclicDevelopment {
  Design design;
  std::vector<int> orbit_lengths;

  bool has_short_orbit() const {
    for (int len : orbit_lengths)
      if (len < design.point_count()) return true;
    return false;
  }
};

/// Blocks {B + i mod v : i in Z_v} for every base block, multiplicity kept.
inline CyclicDevelopment develop_cyclic(int v, const std::vector<Block>& base_blocks) {
  if (v < 1) throw Error("develop_cyclic: modulus must be >= 1");
  for (const auto& b : base_blocks)
    for (int p : b)
      if (p < 0 || p >= v) throw Error("develop_cyclic: base entry outside [0, v)");

  std::vector<Block> out;
  std::vector<int> orbit_lengths;
  out.reserve(base_blocks.size() * static_cast<std::size_t>(v));
  for (const auto& base : base_blocks) {
    std::vector<Block> translates;
    translates.reserve(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) {
      Block t;
      t.reserve(base.size());
      for (int p : base) t.push_back((p + i) % v);
      std::sort(t.begin(), t.end());
      translates.push_back(std::move(t));
    }
    auto distinct = translates;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    orbit_lengths.push_back(static_cast<int>(distinct.size()));
    for (auto& t : translates) out.push_back(std::move(t));
  }
  return {Design(v, std::move(out)), std::move(orbit_lengths)};
}

inline Design apply_permutation(const Design& d, const Permutation& p) {
  if (p.size() != d.point_count()) throw Error("apply_permutation: length mismatch");
  std::vector<Block> out;
  out.reserve(d.blocks().size());
  for (const auto& b : d.blocks()) {
    Block nb;
    nb.reserve(b.size());
    for (int x : b) nb.push_back(p(x));
    out.push_back(std::move(nb));
  }
  return Design(d.point_count(), std::move(out));
}

inline Design union_designs(const std::vector<Design>& designs) {
  if (designs.empty()) throw Error("union_designs: empty list");
  int v = designs.front().point_count();
  std::vector<Block> out;
  for (const auto& d : designs) {
    if (d.point_count() != v) throw Error("union_designs: mismatched point counts");
    out.insert(out.end(), d.blocks().begin(), d.blocks().end());
  }
  return Design(v, std::move(out));
}

/// All C(v,k) k-subsets, each once.
inline Design complete_design(int v, int k) {
  if (k < 1 || k > v) throw Error("complete_design: need 1 <= k <= v");
  std::vector<Block> out;
  out.reserve(static_cast<std::size_t>(combination_count(v, k)));
  for_each_combination(v, k, [&](const std::vector<int>& c) { out.push_back(c); });
  return Design(v, std::move(out));
}

struct OneFactorization {
  int v = 0;
  std::vector<std::vector<std::pair<int, int>>> factors;
};

/// Circle-method one-factorization of K_v for even v: point v-1 is fixed,
/// factor j pairs {v-1, j} together with {(j-d) mod (v-1), (j+d) mod (v-1)}
/// for d = 1..v/2-1.
inline OneFactorization one_factorization(int v) {
  if (v < 2 || v % 2 != 0) throw Error("one_factorization: point count must be even and >= 2");
  OneFactorization f;
  f.v = v;
  const int m = v - 1;
  for (int j = 0; j < m; ++j) {
    std::vector<std::pair<int, int>> factor;
    factor.reserve(static_cast<std::size_t>(v / 2));
    factor.emplace_back(std::min(m, j), std::max(m, j));
    for (int d = 1; d <= v / 2 - 1; ++d) {
      int a = ((j - d) % m + m) % m;
      int b = (j + d) % m;
      factor.emplace_back(std::min(a, b), std::max(a, b));
    }
    f.factors.push_back(std::move(factor));
  }
  return f;
}

/// Classical doubling: an SQS(v) yields an SQS(2v). Copy 0 keeps the original
/// labels, copy 1 shifts by v. Type-A blocks replicate the input in each copy;
/// type-B blocks cross a pair from factor j of copy 0 with a pair from the
/// same factor j of copy 1.
inline Design doubling_sqs(const Design& d) {
  const int v = d.point_count();
  if (v % 2 != 0) throw Error("doubling_sqs: point count must be even");
  if (!validate_t_design(d, 3, 4, 1).ok) throw Error("doubling_sqs: input does not validate as a Steiner quadruple system");

  std::vector<Block> out;
  for (const auto& b : d.blocks()) {
    out.push_back(b);
    Block shifted;
    shifted.reserve(4);
    for (int p : b) shifted.push_back(p + v);
    out.push_back(std::move(shifted));
  }
  auto f = one_factorization(v);
  for (const auto& factor : f.factors)
    for (auto [a, b] : factor)
      for (auto [c, dd] : factor) out.push_back({a, b, c + v, dd + v});
  return Design(2 * v, std::move(out));
}

inline Design netto13() {
  return develop_cyclic(13, {{1, 3, 9}, {2, 5, 6}}).design;
}

/// Simple fourfold triple system of order 13: the base system united with
/// three permuted copies chosen so that all four block sets are pairwise
/// disjoint.
inline Design ts13_4() {
  Design base = netto13();
  Permutation s1({11, 0, 3, 6, 4, 7, 1, 2, 8, 10, 5, 9, 12});
  Permutation s2({11, 4, 3, 10, 0, 1, 5, 8, 12, 6, 7, 2, 9});
  Permutation s3({12, 1, 2, 7, 4, 8, 11, 3, 10, 6, 5, 9, 0});
  return union_designs(
      {base, apply_permutation(base, s1), apply_permutation(base, s2), apply_permutation(base, s3)});
}

inline Design ts11_3() {
  std::vector<Block> bases;
  for (int j = 1; j <= 5; ++j) bases.push_back({0, j, (2 * j) % 11});
  return develop_cyclic(11, bases).design;
}

inline Design ts11_6() { return supplementary_design(ts11_3(), 3); }

/// The unique SQS(8): 4-subsets of the 3-bit vectors 0..7 with bitwise XOR 0
/// (the planes of the binary affine 3-space).
inline Design sqs8() {
  std::vector<Block> out;
  for_each_combination(8, 4, [&](const std::vector<int>& c) {
    if ((c[0] ^ c[1] ^ c[2] ^ c[3]) == 0) out.push_back(c);
  });
  return Design(8, std::move(out));
}

inline Design sqs16() { return doubling_sqs(sqs8()); }

/// An SQS(16) containing no sub-SQS(8), found by a seeded local search and
/// frozen as a catalog entry. Doubled systems embed two SQS(8) copies, and the
/// complementary block pairs inside a copy share their {1}-BIG neighborhoods,
/// so their {1}-BIG is never 2-e.c.; this design avoids that obstruction and
/// its {1}-BIG is 2-e.c.
inline Design sqs16_no_sub8() {
  static const int q[140][4] = {
      {0, 1, 2, 3}, {0, 1, 4, 5}, {0, 1, 6, 7}, {0, 1, 8, 9}, {0, 1, 10, 11},
      {0, 1, 12, 13}, {0, 1, 14, 15}, {0, 2, 4, 11}, {0, 2, 5, 7}, {0, 2, 6, 9},
      {0, 2, 8, 10}, {0, 2, 12, 14}, {0, 2, 13, 15}, {0, 3, 4, 7}, {0, 3, 5, 6},
      {0, 3, 8, 11}, {0, 3, 9, 10}, {0, 3, 12, 15}, {0, 3, 13, 14}, {0, 4, 6, 15},
      {0, 4, 8, 12}, {0, 4, 9, 13}, {0, 4, 10, 14}, {0, 5, 8, 13}, {0, 5, 9, 12},
      {0, 5, 10, 15}, {0, 5, 11, 14}, {0, 6, 8, 14}, {0, 6, 10, 12}, {0, 6, 11, 13},
      {0, 7, 8, 15}, {0, 7, 9, 14}, {0, 7, 10, 13}, {0, 7, 11, 12}, {0, 9, 11, 15},
      {1, 2, 4, 7}, {1, 2, 5, 9}, {1, 2, 6, 14}, {1, 2, 8, 11}, {1, 2, 10, 13},
      {1, 2, 12, 15}, {1, 3, 4, 6}, {1, 3, 5, 7}, {1, 3, 8, 10}, {1, 3, 9, 11},
      {1, 3, 12, 14}, {1, 3, 13, 15}, {1, 4, 8, 13}, {1, 4, 9, 12}, {1, 4, 10, 15},
      {1, 4, 11, 14}, {1, 5, 6, 13}, {1, 5, 8, 12}, {1, 5, 10, 14}, {1, 5, 11, 15},
      {1, 6, 8, 15}, {1, 6, 9, 10}, {1, 6, 11, 12}, {1, 7, 8, 14}, {1, 7, 9, 15},
      {1, 7, 10, 12}, {1, 7, 11, 13}, {1, 9, 13, 14}, {2, 3, 4, 5}, {2, 3, 6, 15},
      {2, 3, 7, 14}, {2, 3, 8, 9}, {2, 3, 10, 11}, {2, 3, 12, 13}, {2, 4, 6, 13},
      {2, 4, 8, 14}, {2, 4, 9, 15}, {2, 4, 10, 12}, {2, 5, 6, 10}, {2, 5, 8, 15},
      {2, 5, 11, 12}, {2, 5, 13, 14}, {2, 6, 7, 11}, {2, 6, 8, 12}, {2, 7, 8, 13},
      {2, 7, 9, 12}, {2, 7, 10, 15}, {2, 9, 10, 14}, {2, 9, 11, 13}, {2, 11, 14, 15},
      {3, 4, 8, 15}, {3, 4, 9, 14}, {3, 4, 10, 13}, {3, 4, 11, 12}, {3, 5, 8, 14},
      {3, 5, 9, 15}, {3, 5, 10, 12}, {3, 5, 11, 13}, {3, 6, 7, 10}, {3, 6, 8, 13},
      {3, 6, 9, 12}, {3, 6, 11, 14}, {3, 7, 8, 12}, {3, 7, 9, 13}, {3, 7, 11, 15},
      {3, 10, 14, 15}, {4, 5, 6, 7}, {4, 5, 8, 9}, {4, 5, 10, 11}, {4, 5, 12, 13},
      {4, 5, 14, 15}, {4, 6, 8, 10}, {4, 6, 9, 11}, {4, 6, 12, 14}, {4, 7, 8, 11},
      {4, 7, 9, 10}, {4, 7, 12, 15}, {4, 7, 13, 14}, {4, 11, 13, 15}, {5, 6, 8, 11},
      {5, 6, 9, 14}, {5, 6, 12, 15}, {5, 7, 8, 10}, {5, 7, 9, 11}, {5, 7, 12, 14},
      {5, 7, 13, 15}, {5, 9, 10, 13}, {6, 7, 8, 9}, {6, 7, 12, 13}, {6, 7, 14, 15},
      {6, 9, 13, 15}, {6, 10, 11, 15}, {6, 10, 13, 14}, {7, 10, 11, 14}, {8, 9, 10, 11},
      {8, 9, 12, 13}, {8, 9, 14, 15}, {8, 10, 12, 14}, {8, 10, 13, 15}, {8, 11, 12, 15},
      {8, 11, 13, 14}, {9, 10, 12, 15}, {9, 11, 12, 14}, {10, 11, 12, 13}, {12, 13, 14, 15},
  };
  std::vector<Block> out;
  out.reserve(140);
  for (const auto& row : q) out.push_back({row[0], row[1], row[2], row[3]});
  return Design(16, std::move(out));
}

/// The affine plane of order 3: points (x,y) in F_3 x F_3 indexed 3x+y,
/// blocks the 12 lines.
inline Design sts9() {
  std::vector<Block> out;
  for (int c = 0; c < 3; ++c) out.push_back({3 * c, 3 * c + 1, 3 * c + 2});
  for (int m = 0; m < 3; ++m)
    for (int b = 0; b < 3; ++b) {
      Block line;
      for (int x = 0; x < 3; ++x) line.push_back(3 * x + (m * x + b) % 3);
      out.push_back(std::move(line));
    }
  return Design(9, std::move(out));
}

constexpr std::uint64_t kDefaultSeed = 20190225;

/// Simple twofold triple system of order 9: the affine plane united with a
/// block-disjoint permuted copy, found by a seeded random search.
inline Design ts9_2(std::uint64_t seed = kDefaultSeed) {
  Design base = sts9();
  Rng gen(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Permutation p(random_permutation_images(gen, 9));
    Design image = apply_permutation(base, p);
    std::vector<Block> common;
    std::set_intersection(base.blocks().begin(), base.blocks().end(), image.blocks().begin(),
                          image.blocks().end(), std::back_inserter(common));
    if (common.empty()) return union_designs({base, image});
  }
  throw Error("ts9_2: no block-disjoint permutation found");
}

namespace detail {

inline bool parse_complete_alias(const std::string& name, int& v, int& k) {
  // Accepts complete(v,k) with optional spaces around the integers.
  if (name.rfind("complete(", 0) != 0 || name.back() != ')') return false;
  std::string inner = name.substr(9, name.size() - 10);
  auto comma = inner.find(',');
  if (comma == std::string::npos) return false;
  auto parse_int = [](std::string s, int& out) {
    auto l = s.find_first_not_of(" \t");
    auto r = s.find_last_not_of(" \t");
    if (l == std::string::npos) return false;
    s = s.substr(l, r - l + 1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    try {
      out = std::stoi(s);
    } catch (...) {
      return false;
    }
    return true;
  };
  return parse_int(inner.substr(0, comma), v) && parse_int(inner.substr(comma + 1), k);
}

}  // namespace detail

/// Catalog lookup. Accepts netto13, ts13_4, ts11_3, ts11_6, sqs8, sqs16,
/// sqs16_no_sub8, sts9, ts9_2, and complete(v,k) aliases. The seed only
/// affects ts9_2.
inline Design builtin(const std::string& name, std::uint64_t seed = kDefaultSeed) {
  if (name == "netto13") return netto13();
  if (name == "ts13_4") return ts13_4();
  if (name == "ts11_3") return ts11_3();
  if (name == "ts11_6") return ts11_6();
  if (name == "sqs8") return sqs8();
  if (name == "sqs16") return sqs16();
  if (name == "sqs16_no_sub8") return sqs16_no_sub8();
  if (name == "sts9") return sts9();
  if (name == "ts9_2") return ts9_2(seed);
  int v = 0, k = 0;
  if (detail::parse_complete_alias(name, v, k)) {
    if (k < 1 || k > v) throw Error("builtin: complete(v,k) needs 1 <= k <= v");
    return complete_design(v, k);
  }
  throw Error("builtin: unknown design name '" + name + "'");
}

inline bool is_builtin_name(const std::string& name) {
  static const char* names[] = {"netto13", "ts13_4", "ts11_3", "ts11_6", "sqs8",
                                "sqs16",   "sqs16_no_sub8", "sts9", "ts9_2"};
  for (const char* n : names)
    if (name == n) return true;
  int v = 0, k = 0;
  return detail::parse_complete_alias(name, v, k);
}

}  // namespace ecd
