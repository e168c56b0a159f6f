#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sympverma/core.hpp"

#include <vector>

using namespace sympverma;

TEST_CASE("alphabet order examples at rank 2") {
  CHECK(entry_compare(1, 2, 2) < 0);
  CHECK(entry_compare(2, -2, 2) < 0);
  CHECK(entry_compare(-2, -1, 2) < 0);
  CHECK(entry_compare(-1, -1, 2) == 0);
  CHECK(entry_compare(-1, 1, 2) > 0);
}

static std::vector<Entry> chain(int n) {
  // 1 < 2 < ... < n < nbar < ... < 1bar
  std::vector<Entry> c;
  for (int i = 1; i <= n; ++i) c.push_back(i);
  for (int i = n; i >= 1; --i) c.push_back(-i);
  return c;
}

TEST_CASE("order key is an isomorphism onto 0..2n-1 for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    auto c = chain(n);
    for (int k = 0; k < 2 * n; ++k) {
      CHECK(order_key(c[k], n) == k);
    }
  }
}

TEST_CASE("entry_compare is a strict total order for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    auto c = chain(n);
    for (Entry x : c) {
      for (Entry y : c) {
        int xy = entry_compare(x, y, n);
        CHECK(xy == -entry_compare(y, x, n));
        if (x == y) CHECK(xy == 0);
        if (xy == 0) CHECK(x == y);
        for (Entry z : c) {
          if (xy < 0 && entry_compare(y, z, n) < 0) {
            CHECK(entry_compare(x, z, n) < 0);
          }
        }
      }
    }
  }
}

TEST_CASE("rank violations are input errors") {
  CHECK_THROWS_AS(order_key(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(order_key(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(order_key(-5, 4), std::invalid_argument);
  CHECK_THROWS_AS(entry_compare(1, 3, 2), std::invalid_argument);
  CHECK(entry_valid(2, 2));
  CHECK_FALSE(entry_valid(0, 2));
  CHECK_FALSE(entry_valid(-3, 2));
}

TEST_CASE("entry serialization") {
  CHECK(entry_to_string(1) == "1");
  CHECK(entry_to_string(-1) == "1b");
  CHECK(entry_to_string(-2) == "2b");
  CHECK(entry_from_string("2b", 2) == -2);
  CHECK(entry_from_string("1", 2) == 1);
  for (int n = 1; n <= 6; ++n) {
    for (Entry v : chain(n)) {
      CHECK(entry_from_string(entry_to_string(v), n) == v);
    }
  }
  CHECK_THROWS_AS(entry_from_string("0", 2), std::invalid_argument);
  CHECK_THROWS_AS(entry_from_string("3", 2), std::invalid_argument);
  CHECK_THROWS_AS(entry_from_string("1B", 2), std::invalid_argument);
  CHECK_THROWS_AS(entry_from_string("b1", 2), std::invalid_argument);
  CHECK_THROWS_AS(entry_from_string("", 2), std::invalid_argument);
  CHECK_THROWS_AS(entry_from_string("-1", 2), std::invalid_argument);
}

TEST_CASE("partition_of") {
  CHECK(partition_of({1, 2}) == std::pair{3, 2});
  CHECK(partition_of({0, 0}) == std::pair{0, 0});
  CHECK(partition_of({5, 3}) == std::pair{8, 3});
  for (int m1 = 0; m1 <= 20; ++m1) {
    for (int m2 = 0; m2 <= 20; ++m2) {
      auto [l1, l2] = partition_of({m1, m2});
      CHECK(l1 >= l2);
      CHECK(l2 >= 0);
    }
  }
  CHECK_THROWS_AS(partition_of({-1, 0}), std::invalid_argument);
}

TEST_CASE("verma tuples order lexicographically") {
  CHECK(VermaTuple{0, 1, 0, 0} < VermaTuple{1, 0, 0, 0});
  CHECK(VermaTuple{1, 2, 0, 0} < VermaTuple{1, 2, 1, 0});
  CHECK(VermaTuple{2, 3, 1, 0} == VermaTuple{2, 3, 1, 0});
}
