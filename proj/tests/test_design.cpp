#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "ecd/constructions.hpp"
#include "ecd/design.hpp"
#include "ecd/error.hpp"

using ecd::Block;
using ecd::Design;
using ecd::DesignParams;
using ecd::Error;
using ecd::lambda_h;
using ecd::Rational;
using ecd::validate_pbd;
using ecd::validate_t_design;
using ecd::ValidationReport;

namespace {

Design fano() {
  return Design(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

}  // namespace

TEST_CASE("design normalizes blocks on construction") {
  Design d(5, {{4, 3}, {2, 0, 1}});
  REQUIRE(d.point_count() == 5);
  REQUIRE(d.block_count() == 2);
  REQUIRE(d.block(0) == Block{0, 1, 2});
  REQUIRE(d.block(1) == Block{3, 4});

  // multiplicity is preserved and duplicates sort adjacent
  Design multi(3, {{0, 1}, {0, 1}, {0, 2}});
  REQUIRE(multi.block_count() == 3);
  REQUIRE(multi.block(0) == multi.block(1));
  REQUIRE_FALSE(ecd::is_simple(multi));
  REQUIRE(ecd::is_simple(fano()));
}

TEST_CASE("design rejects malformed input") {
  REQUIRE_THROWS_AS(Design(-1, {}), Error);
  REQUIRE_THROWS_AS(Design(4, {{}}), Error);
  REQUIRE_THROWS_AS(Design(4, {{0, 4}}), Error);
  REQUIRE_THROWS_AS(Design(4, {{-1, 2}}), Error);
  REQUIRE_THROWS_AS(Design(4, {{1, 1, 2}}), Error);
}

TEST_CASE("design block bitsets mirror the blocks") {
  Design d = fano();
  const auto& bits = d.block_bits();
  REQUIRE(bits.size() == 7);
  for (int i = 0; i < d.block_count(); ++i) {
    REQUIRE(bits[static_cast<std::size_t>(i)].size() == 7);
    REQUIRE(bits[static_cast<std::size_t>(i)].to_vector() == d.block(i));
  }
}

TEST_CASE("design parameters validate their ranges") {
  REQUIRE_NOTHROW(DesignParams(2, 7, {3}, 1));
  REQUIRE_THROWS_AS(DesignParams(0, 7, {3}, 1), Error);
  REQUIRE_THROWS_AS(DesignParams(2, 7, {3}, 0), Error);
  REQUIRE_THROWS_AS(DesignParams(2, 7, {1}, 1), Error);
  REQUIRE_THROWS_AS(DesignParams(2, 7, {8}, 1), Error);
}

TEST_CASE("replication profile counts blocks through each point") {
  auto r = ecd::replication_profile(fano());
  REQUIRE(r == std::vector<long long>(7, 3));
}

TEST_CASE("lambda_h computes the h-wise index") {
  REQUIRE(lambda_h(2, 7, 3, 1, 0) == Rational(7));
  REQUIRE(lambda_h(2, 7, 3, 1, 1) == Rational(3));
  REQUIRE(lambda_h(2, 7, 3, 1, 2) == Rational(1));
  REQUIRE(lambda_h(3, 8, 4, 1, 2) == Rational(3));
  REQUIRE(lambda_h(3, 8, 4, 1, 1) == Rational(7));
  REQUIRE(lambda_h(3, 8, 4, 1, 0) == Rational(14));
  // non-integral index for parameters admitting no design
  REQUIRE(lambda_h(2, 8, 3, 1, 1) == Rational(7, 2));
  REQUIRE_THROWS_AS(lambda_h(2, 7, 3, 1, 3), Error);
  REQUIRE_THROWS_AS(lambda_h(2, 7, 8, 1, 0), Error);
}

TEST_CASE("validate_t_design accepts the projective plane of order 2") {
  auto rep = validate_t_design(fano(), 2, 3, 1);
  REQUIRE(rep.ok);
  REQUIRE(rep.violations.empty());
  REQUIRE_FALSE(rep.truncated);
  REQUIRE(rep.derived.at("b") == Rational(7));
  REQUIRE(rep.derived.at("lambda_0") == Rational(7));
  REQUIRE(rep.derived.at("lambda_1") == Rational(3));
  REQUIRE(rep.derived.at("lambda_2") == Rational(1));
  REQUIRE(rep.derived.at("r_min") == Rational(3));
  REQUIRE(rep.derived.at("r_max") == Rational(3));
  REQUIRE(rep.derived.at("replication_bounds_ok") == Rational(1));
}

TEST_CASE("validate_t_design reports violations in colex order") {
  // drop the line {0,1,2}: its three pairs become uncovered
  Design broken(7, {{0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  auto rep = validate_t_design(broken, 2, 3, 1);
  REQUIRE_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 3);
  REQUIRE(rep.violations[0].kind == "coverage");
  REQUIRE(rep.violations[0].subset == std::vector<int>{0, 1});
  REQUIRE(rep.violations[0].observed == 0);
  REQUIRE(rep.violations[0].expected == 1);
  REQUIRE(rep.violations[1].subset == std::vector<int>{0, 2});
  REQUIRE(rep.violations[2].subset == std::vector<int>{1, 2});

  auto capped = validate_t_design(broken, 2, 3, 1, 2);
  REQUIRE_FALSE(capped.ok);
  REQUIRE(capped.violations.size() == 2);
  REQUIRE(capped.truncated);
}

TEST_CASE("validate_t_design flags wrong block sizes before coverage") {
  auto blocks = fano().blocks();
  blocks.push_back({0, 1});
  auto rep = validate_t_design(Design(7, blocks), 2, 3, 1);
  REQUIRE_FALSE(rep.ok);
  REQUIRE(rep.violations[0].kind == "block_size");
  REQUIRE(rep.violations[0].subset == std::vector<int>{0, 1});
  REQUIRE(rep.violations[0].observed == 2);
  REQUIRE(rep.violations[0].expected == 3);
  REQUIRE(rep.violations[1].kind == "coverage");
  REQUIRE(rep.violations[1].subset == std::vector<int>{0, 1});
  REQUIRE(rep.violations[1].observed == 2);

  REQUIRE_THROWS_AS(validate_t_design(fano(), 0, 3, 1), Error);
  REQUIRE_THROWS_AS(validate_t_design(fano(), 4, 3, 1), Error);
  REQUIRE_THROWS_AS(validate_t_design(fano(), 2, 8, 1), Error);
  REQUIRE_THROWS_AS(validate_t_design(fano(), 2, 3, 0), Error);
}

TEST_CASE("validate_pbd accepts mixed block sizes") {
  Design pbd(4, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}});
  auto rep = validate_pbd(pbd, {2, 3}, 1);
  REQUIRE(rep.ok);
  REQUIRE(rep.derived.at("b") == Rational(4));
  REQUIRE(rep.derived.at("r_min") == Rational(2));
  REQUIRE(rep.derived.at("r_max") == Rational(3));

  auto wrong_size = validate_pbd(pbd, {3}, 1);
  REQUIRE_FALSE(wrong_size.ok);
  REQUIRE(wrong_size.violations[0].kind == "block_size");

  auto wrong_lambda = validate_pbd(pbd, {2, 3}, 2);
  REQUIRE_FALSE(wrong_lambda.ok);
  REQUIRE(wrong_lambda.violations[0].kind == "coverage");

  REQUIRE_THROWS_AS(validate_pbd(pbd, {}, 1), Error);
  REQUIRE_THROWS_AS(validate_pbd(pbd, {1, 3}, 1), Error);
  REQUIRE_THROWS_AS(validate_pbd(pbd, {2, 3}, 0), Error);
  REQUIRE_THROWS_AS(validate_pbd(Design(1, {{0}}), {2}, 1), Error);
}

TEST_CASE("one cover free detects nested blocks") {
  REQUIRE(ecd::is_one_cover_free(fano()));
  REQUIRE_FALSE(ecd::is_one_cover_free(Design(4, {{0, 1, 2}, {0, 1}})));
  REQUIRE_FALSE(ecd::is_one_cover_free(Design(4, {{0, 1}, {0, 1}})));
}

TEST_CASE("derived design drops t, v, k by one") {
  Design der = ecd::derived_design(ecd::sqs8(), 0);
  REQUIRE(der.point_count() == 7);
  REQUIRE(der.block_count() == 7);
  REQUIRE(validate_t_design(der, 2, 3, 1).ok);

  // deriving at an interior point relabels the tail down by one
  Design tiny = ecd::derived_design(Design(4, {{0, 1, 3}, {1, 2, 3}}), 1);
  REQUIRE(tiny.point_count() == 3);
  REQUIRE(tiny.blocks() == std::vector<Block>{{0, 2}, {1, 2}});

  REQUIRE_THROWS_AS(ecd::derived_design(fano(), 7), Error);
  REQUIRE_THROWS_AS(ecd::derived_design(fano(), -1), Error);
}

TEST_CASE("supplementary design holds the non-blocks") {
  Design supp = ecd::supplementary_design(fano(), 3);
  REQUIRE(supp.block_count() == 28);
  REQUIRE(validate_t_design(supp, 2, 3, 4).ok);

  REQUIRE_THROWS_AS(ecd::supplementary_design(Design(4, {{0, 1}, {0, 1}}), 2), Error);
  REQUIRE_THROWS_AS(ecd::supplementary_design(fano(), 4), Error);
  REQUIRE_THROWS_AS(ecd::supplementary_design(fano(), 0), Error);
}

TEST_CASE("lambda admissibility for simple triple systems") {
  // gcd(v-2, 6) must divide lambda, and lambda <= v-2
  REQUIRE(ecd::is_lambda_admissible(13, 1));
  REQUIRE(ecd::is_lambda_admissible(13, 4));
  REQUIRE(ecd::is_lambda_admissible(13, 11));
  REQUIRE_FALSE(ecd::is_lambda_admissible(13, 12));
  REQUIRE(ecd::is_lambda_admissible(11, 3));
  REQUIRE(ecd::is_lambda_admissible(11, 6));
  REQUIRE_FALSE(ecd::is_lambda_admissible(11, 2));
  REQUIRE_FALSE(ecd::is_lambda_admissible(11, 4));
  REQUIRE(ecd::is_lambda_admissible(9, 2));
  REQUIRE_FALSE(ecd::is_lambda_admissible(9, 8));
  REQUIRE(ecd::is_lambda_admissible(10, 2));
  REQUIRE_FALSE(ecd::is_lambda_admissible(10, 3));
  REQUIRE_THROWS_AS(ecd::is_lambda_admissible(2, 1), Error);
  REQUIRE_THROWS_AS(ecd::is_lambda_admissible(9, 0), Error);
}
