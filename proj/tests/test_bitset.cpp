#include <catch2/catch_amalgamated.hpp>

#include "ecd/bitset.hpp"

using ecd::Bitset;

TEST_CASE("bitset set, test, reset") {
  Bitset b(70);
  REQUIRE(b.size() == 70);
  REQUIRE(b.none());
  REQUIRE(b.count() == 0);

  b.set(0);
  b.set(63);
  b.set(64);
  b.set(69);
  REQUIRE(b.test(0));
  REQUIRE(b.test(63));
  REQUIRE(b.test(64));
  REQUIRE(b.test(69));
  REQUIRE_FALSE(b.test(1));
  REQUIRE(b.count() == 4);
  REQUIRE(b.any());

  b.reset(63);
  REQUIRE_FALSE(b.test(63));
  REQUIRE(b.count() == 3);
}

TEST_CASE("bitset full keeps tail bits zero") {
  Bitset f = Bitset::full(70);
  REQUIRE(f.count() == 70);
  REQUIRE(f.test(69));
  REQUIRE((~f).none());

  Bitset aligned = Bitset::full(64);
  REQUIRE(aligned.count() == 64);
}

TEST_CASE("bitset bitwise operations") {
  Bitset a(100), b(100);
  a.set(1);
  a.set(50);
  a.set(99);
  b.set(50);
  b.set(70);

  Bitset i = a & b;
  REQUIRE(i.count() == 1);
  REQUIRE(i.test(50));

  Bitset u = a | b;
  REQUIRE(u.count() == 4);
  REQUIRE(u.test(1));
  REQUIRE(u.test(70));

  Bitset d = a;
  d.and_not(b);
  REQUIRE(d.count() == 2);
  REQUIRE(d.test(1));
  REQUIRE(d.test(99));
  REQUIRE_FALSE(d.test(50));

  Bitset c = ~a;
  REQUIRE(c.count() == 97);
  REQUIRE_FALSE(c.test(50));
  REQUIRE(c.test(0));
  REQUIRE(~c == a);

  Bitset a2 = a;
  a2 &= b;
  REQUIRE(a2 == i);
  a2 = a;
  a2 |= b;
  REQUIRE(a2 == u);
}

TEST_CASE("bitset subset and intersection queries") {
  Bitset a(10), b(10), c(10);
  a.set(2);
  a.set(5);
  b.set(2);
  b.set(5);
  b.set(7);
  c.set(3);

  REQUIRE(a.is_subset_of(b));
  REQUIRE_FALSE(b.is_subset_of(a));
  REQUIRE(a.is_subset_of(a));
  REQUIRE(c.is_subset_of(~a));

  REQUIRE(a.intersects(b));
  REQUIRE_FALSE(a.intersects(c));
  REQUIRE(a.count_and(b) == 2);
  REQUIRE(a.count_and(c) == 0);

  Bitset empty(10);
  REQUIRE(empty.is_subset_of(a));
  REQUIRE_FALSE(empty.intersects(a));
}

TEST_CASE("bitset find iteration walks set bits in order") {
  Bitset b(130);
  b.set(3);
  b.set(64);
  b.set(127);
  b.set(129);

  REQUIRE(b.find_first() == 3);
  REQUIRE(b.find_next(3) == 64);
  REQUIRE(b.find_next(64) == 127);
  REQUIRE(b.find_next(127) == 129);
  REQUIRE(b.find_next(129) == Bitset::npos);
  REQUIRE(b.find_next(0) == 3);

  REQUIRE(b.to_vector() == std::vector<int>{3, 64, 127, 129});

  Bitset empty(40);
  REQUIRE(empty.find_first() == Bitset::npos);
  REQUIRE(empty.to_vector().empty());
}
