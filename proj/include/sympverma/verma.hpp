#pragma once

#include "sympverma/core.hpp"
#include "sympverma/tableau.hpp"

#include <string>
#include <vector>

namespace sympverma {

// The exponent inequality system:
//   0 <= a1 <= m2
//   0 <= a2 <= m1 + 2*a1
//   0 <= a3 <= min(a2, (a2 + m1) / 2)   evaluated as 2*a3 <= a2 + m1
//   0 <= a4 <= min(m1, a3)
bool is_valid_tuple(VermaTuple a, HighestWeight hw);

// All valid tuples in lexicographic (a1, a2, a3, a4) order.
std::vector<VermaTuple> enumerate_tuples(HighestWeight hw);

// The KN tableau T(a) matched to the monomial by entry counts. Output is
// checked against is_kn_sp4; a negative count signals an internal bug.
Tableau tuple_to_tableau(VermaTuple a, HighestWeight hw);

// Inverse of tuple_to_tableau via threshold counts on the two rows.
VermaTuple tableau_to_tuple(const Tableau& t);

// Weight of f^a v: (m1+m2-a2-a4, m2-2*a1+a2-2*a3+a4).
WeightVec verma_weight(VermaTuple a, HighestWeight hw);

// "f1^a4 f2^a3 f1^a2 f2^a1 v" with zero-exponent factors omitted and
// "^1" elided; the zero tuple renders as "v".
std::string monomial_string(VermaTuple a);

}  // namespace sympverma
