#pragma once

#include "sympverma/core.hpp"

#include <vector>

namespace sympverma {

// Rows of entries over the rank-n barred alphabet. Validity (semistandard,
// KN conditions) is a predicate, not a type invariant: the tensor model
// needs arbitrary column-strict fillings too.
struct Tableau {
  int n = 2;
  std::vector<std::vector<Entry>> rows;

  std::vector<int> shape() const;

  bool operator==(const Tableau&) const = default;
};

// Entries in rank, rows nonempty with weakly decreasing lengths, at most n rows.
bool well_formed(const Tableau& t);

// Rows weakly increase, columns strictly increase.
bool is_semistandard(const Tableau& t);

// Within one column: i at p-th box from top and i-bar at q-th from bottom
// force p + q <= i.
bool check_one_bar_pairs(const Tableau& t);

// Adjacent-column configurations with p <= q < r <= s, i <= j force
// (q - p) + (s - r) < j - i. Degenerate placements (i = j, p = q, r = s)
// are in scope.
bool check_adjacent_columns(const Tableau& t);

bool is_kn(const Tableau& t);

// Independently coded rank-2 specialization: semistandard, no column with
// both 1 and 1bar, and neither forbidden two-column pattern around (2, 2bar).
bool is_kn_sp4(const Tableau& t);

// Coordinate i: (count of i) - (count of i-bar). Length n.
std::vector<long> weight_vector(const Tableau& t);

// Rank-2 convenience over weight_vector.
WeightVec tableau_weight(const Tableau& t);

// All KN tableaux of shape (m1+m2, m2) over {1,2,2b,1b}, sorted descending
// under tableau_order.
std::vector<Tableau> enumerate_kn4(HighestWeight hw);

}  // namespace sympverma
