#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sympverma/core.hpp"
#include "sympverma/tableau.hpp"
#include "sympverma/verma.hpp"
#include "sympverma/weyl.hpp"

using namespace sympverma;

TEST_CASE("known dimensions") {
  CHECK(weyl_dim(1, 0) == 4);
  CHECK(weyl_dim(3, 2) == 40);
  CHECK(weyl_dim(0, 0) == 1);
  CHECK(weyl_dim(3, 1) == 35);
  CHECK(weyl_dim(1, 1) == 5);
  CHECK(weyl_dim(2, 0) == 10);
}

TEST_CASE("positivity and divisibility up to lambda1 = 50") {
  for (int l1 = 0; l1 <= 50; ++l1) {
    for (int l2 = 0; l2 <= l1; ++l2) {
      CHECK(weyl_dim(l1, l2) > 0);  // the /6 inside throws if not divisible
    }
  }
}

TEST_CASE("non-partition input is rejected") {
  CHECK_THROWS_AS(weyl_dim(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dim(0, -1), std::invalid_argument);
}

// Filter every filling of the shape through the KN predicate, with no help
// from the pruned enumerator.
static long long brute_force_kn_count(HighestWeight hw) {
  auto [l1, l2] = partition_of(hw);
  int boxes = l1 + l2;
  const Entry letters[4] = {1, 2, -2, -1};
  long long count = 0;
  long long total = 1;
  for (int i = 0; i < boxes; ++i) total *= 4;
  for (long long mask = 0; mask < total; ++mask) {
    long long m = mask;
    Tableau t;
    t.n = 2;
    if (l1 > 0) t.rows.emplace_back();
    for (int j = 0; j < l1; ++j) {
      t.rows[0].push_back(letters[m % 4]);
      m /= 4;
    }
    if (l2 > 0) t.rows.emplace_back();
    for (int j = 0; j < l2; ++j) {
      t.rows[1].push_back(letters[m % 4]);
      m /= 4;
    }
    if (is_kn_sp4(t)) ++count;
  }
  return count;
}

TEST_CASE("formula agrees with brute-force tableau counts at small shapes") {
  for (HighestWeight hw : {HighestWeight{1, 0}, {0, 1}, {1, 1}, {2, 0}}) {
    auto [l1, l2] = partition_of(hw);
    CHECK(weyl_dim(l1, l2) == brute_force_kn_count(hw));
  }
}

TEST_CASE("formula agrees with tuple and tableau enumeration for m <= 6") {
  for (int m1 = 0; m1 <= 6; ++m1) {
    for (int m2 = 0; m2 <= 6; ++m2) {
      HighestWeight hw{m1, m2};
      auto [l1, l2] = partition_of(hw);
      long long dim = weyl_dim(l1, l2);
      CHECK(dim == static_cast<long long>(enumerate_tuples(hw).size()));
      CHECK(dim == static_cast<long long>(enumerate_kn4(hw).size()));
    }
  }
}
