#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "ecd/analysis.hpp"
#include "ecd/constructions.hpp"
#include "ecd/rng.hpp"

using ecd::Design;
using ecd::Error;
using ecd::kohler_alpha;
using ecd::qs_disjoint_margin;
using ecd::Rational;

namespace {

Design fano() {
  return Design(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

}  // namespace

TEST_CASE("intersection profile against a reference point set") {
  auto line = ecd::intersection_profile(fano(), {0, 1, 2});
  REQUIRE(line.m == 3);
  REQUIRE(line.alphas == std::vector<long long>{0, 6, 0, 1});

  auto pair = ecd::intersection_profile(fano(), {0, 1});
  REQUIRE(pair.alphas == std::vector<long long>{2, 4, 1});

  auto empty = ecd::intersection_profile(fano(), {});
  REQUIRE(empty.m == 0);
  REQUIRE(empty.alphas == std::vector<long long>{7});

  REQUIRE_THROWS_AS(ecd::intersection_profile(fano(), {0, 0}), Error);
  REQUIRE_THROWS_AS(ecd::intersection_profile(fano(), {7}), Error);
}

TEST_CASE("triple intersection recursion reproduces a complete design profile") {
  // every 4-subset of 6 points, seen as a 3-design with every triple thrice
  Design d = ecd::complete_design(6, 4);
  auto prof = ecd::intersection_profile(d, {0, 1, 2, 3});
  REQUIRE(prof.alphas == std::vector<long long>{0, 0, 6, 8, 1});

  std::vector<long long> high{prof.alphas[4]};
  REQUIRE(kohler_alpha(3, 6, 4, 3, 4, 3, high) == Rational(8));
  REQUIRE(kohler_alpha(3, 6, 4, 3, 4, 2, high) == Rational(6));
  REQUIRE(kohler_alpha(3, 6, 4, 3, 4, 1, high) == Rational(0));
  REQUIRE(kohler_alpha(3, 6, 4, 3, 4, 0, high) == Rational(0));
}

TEST_CASE("triple intersection recursion matches observed quadruple system counts") {
  Design q = ecd::sqs8();
  ecd::Rng rng(424242);
  for (int m = 5; m <= 7; ++m) {
    auto pts = ecd::random_subset(rng, 8, m);
    auto prof = ecd::intersection_profile(q, pts);
    std::vector<long long> high;
    for (int h = 4; h <= m; ++h) high.push_back(prof.alphas[static_cast<std::size_t>(h)]);
    for (int i = 0; i <= 3; ++i) {
      INFO("m=" << m << " i=" << i);
      REQUIRE(kohler_alpha(3, 8, 4, 1, m, i, high) ==
              Rational(prof.alphas[static_cast<std::size_t>(i)]));
    }
  }
}

TEST_CASE("recursion rejects out-of-range arguments") {
  std::vector<long long> high{1};
  REQUIRE_THROWS_AS(kohler_alpha(3, 6, 4, 3, 4, 4, high), Error);
  REQUIRE_THROWS_AS(kohler_alpha(3, 6, 4, 3, 4, -1, high), Error);
  REQUIRE_THROWS_AS(kohler_alpha(3, 6, 4, 3, 3, 0, high), Error);
  REQUIRE_THROWS_AS(kohler_alpha(3, 6, 4, 3, 7, 0, high), Error);
  REQUIRE_THROWS_AS(kohler_alpha(3, 6, 4, 3, 5, 0, high), Error);  // needs two high alphas
  REQUIRE_THROWS_AS(kohler_alpha(4, 3, 6, 3, 5, 0, high), Error);
}

TEST_CASE("disjoint-block margin is exact for quadruple systems") {
  REQUIRE(qs_disjoint_margin(16, 1, 7, 3) == Rational(10));
  REQUIRE(qs_disjoint_margin(16, 1, 8, 14) == Rational(14));
  REQUIRE(qs_disjoint_margin(16, 1, 4, 1) == Rational(39));
  REQUIRE_THROWS_AS(qs_disjoint_margin(16, 1, 3, 0), Error);
  REQUIRE_THROWS_AS(qs_disjoint_margin(16, 1, 17, 0), Error);

  // blocks have four points, so alpha_0 is a function of alpha_4 alone
  Design q = ecd::sqs16();
  ecd::Rng rng(31337);
  for (int m = 4; m <= 10; ++m) {
    auto pts = ecd::random_subset(rng, 16, m);
    auto prof = ecd::intersection_profile(q, pts);
    for (int h = 5; h <= m; ++h) REQUIRE(prof.alphas[static_cast<std::size_t>(h)] == 0);
    INFO("m=" << m);
    REQUIRE(qs_disjoint_margin(16, 1, m, prof.alphas[4]) == Rational(prof.alphas[0]));
  }
}

TEST_CASE("feasibility screen emits the applicable records") {
  auto steiner = ecd::condition_report(13, 3, 1, 2);
  REQUIRE(steiner.v == 13);
  REQUIRE(steiner.records.size() == 4);
  auto find = [](const ecd::ConditionReport& rep, const std::string& name) {
    for (const auto& r : rep.records)
      if (r.name == name) return r;
    FAIL("missing record " + name);
    return rep.records.front();
  };

  auto lower = find(steiner, "order_lower_bound");
  REQUIRE(lower.relation == ">=");
  REQUIRE(lower.lhs == Rational(13));
  REQUIRE(lower.rhs == Rational(9));
  REQUIRE(lower.satisfied);

  REQUIRE(find(steiner, "steiner_n_upper").satisfied);
  REQUIRE(find(steiner, "steiner_2ec_threshold").rhs == Rational(11));
  // v = 2k(k-1)+1 sits exactly on the strict boundary
  auto pbd = find(steiner, "pbd_2ec_sufficient");
  REQUIRE(pbd.relation == ">");
  REQUIRE(pbd.rhs == Rational(13));
  REQUIRE_FALSE(pbd.satisfied);
  REQUIRE_FALSE(steiner.all_satisfied());

  auto fold = ecd::condition_report(9, 3, 2, 2);
  REQUIRE(find(fold, "fold_n_upper").satisfied);
  for (const auto& r : fold.records) {
    REQUIRE(r.name != "steiner_n_upper");
    REQUIRE(r.name != "steiner_2ec_threshold");
  }

  auto three = ecd::condition_report(31, 3, 1, 3);
  auto upper = find(three, "three_ec_order_upper");
  REQUIRE(upper.relation == "<=");
  REQUIRE(upper.lhs == Rational(31));
  REQUIRE(upper.rhs == Rational(31));
  REQUIRE(upper.satisfied);
  REQUIRE(three.all_satisfied());

  REQUIRE_THROWS_AS(ecd::condition_report(9, 1, 1, 1), Error);
  REQUIRE_THROWS_AS(ecd::condition_report(9, 3, 0, 1), Error);
  REQUIRE_THROWS_AS(ecd::condition_report(9, 3, 1, 0), Error);
}

TEST_CASE("interior sub-system search scans point subsets in colex order") {
  Design f = fano();
  auto line = ecd::find_sub_system(f, 3, 3, 1);
  REQUIRE(line.has_value());
  REQUIRE(*line == std::vector<int>{0, 1, 2});

  auto whole = ecd::find_sub_system(f, 7, 3, 1);
  REQUIRE(whole.has_value());
  REQUIRE(*whole == std::vector<int>{0, 1, 2, 3, 4, 5, 6});

  // the doubled quadruple system keeps its first half as a pair-index-3 interior design
  auto half = ecd::find_sub_system(ecd::sqs16(), 8, 4, 3);
  REQUIRE(half.has_value());
  REQUIRE(*half == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  REQUIRE_FALSE(ecd::find_sub_system(ecd::sqs16(), 8, 4, 1).has_value());
  REQUIRE_FALSE(ecd::find_sub_system(ecd::sqs16_no_sub8(), 8, 4, 3).has_value());

  REQUIRE_FALSE(ecd::find_sub_system(f, 1, 3, 1).has_value());
  REQUIRE_FALSE(ecd::find_sub_system(f, 2, 3, 1).has_value());
  REQUIRE_THROWS_AS(ecd::find_sub_system(f, 8, 3, 1), Error);
  REQUIRE_THROWS_AS(ecd::find_sub_system(f, 3, 1, 1), Error);
  REQUIRE_THROWS_AS(ecd::find_sub_system(f, 3, 3, 0), Error);
}
