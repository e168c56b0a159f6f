#pragma once

#include "sympverma/tableau.hpp"

#include <utility>

namespace sympverma {

// Box coordinates (row, col), 1-based.
using BoxPair = std::pair<int, int>;

// (i,j) < (i',j') iff j > j', or j = j' and i < i'. Returns -1 / 0 / +1.
int pair_order(BoxPair a, BoxPair b);

// Total order on same-shape fillings: compare entries at the smallest
// admissible pair under pair_order. Returns -1 / 0 / +1.
int tableau_order(const Tableau& y, const Tableau& z);

}  // namespace sympverma
