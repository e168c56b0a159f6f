#include "sympverma/verma.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympverma {

bool is_valid_tuple(VermaTuple a, HighestWeight hw) {
  return a.a1 >= 0 && a.a1 <= hw.m2 &&
         a.a2 >= 0 && a.a2 <= hw.m1 + 2 * a.a1 &&
         a.a3 >= 0 && a.a3 <= a.a2 && 2 * a.a3 <= a.a2 + hw.m1 &&
         a.a4 >= 0 && a.a4 <= std::min(hw.m1, a.a3);
}

std::vector<VermaTuple> enumerate_tuples(HighestWeight hw) {
  std::vector<VermaTuple> out;
  for (int a1 = 0; a1 <= hw.m2; ++a1) {
    for (int a2 = 0; a2 <= hw.m1 + 2 * a1; ++a2) {
      int a3max = std::min((a2 + hw.m1) / 2, a2);
      for (int a3 = 0; a3 <= a3max; ++a3) {
        for (int a4 = 0; a4 <= std::min(hw.m1, a3); ++a4) {
          out.push_back({a1, a2, a3, a4});
        }
      }
    }
  }
  return out;
}

Tableau tuple_to_tableau(VermaTuple a, HighestWeight hw) {
  if (!is_valid_tuple(a, hw)) {
    throw std::invalid_argument("tuple violates the inequality system");
  }
  // Entry counts (entry, multiplicity) per row, by the three cases on
  // a2 - m1. h is the count of 1bar in row 2.
  std::vector<std::pair<Entry, int>> r1, r2;
  if (a.a2 >= hw.m1 && (a.a2 - hw.m1) % 2 == 1) {
    int h = (a.a2 - hw.m1 - 1) / 2;
    r1 = {{1, hw.m2 - h - 1}, {2, hw.m1 - a.a3 + h + 1}, {-2, a.a3 - a.a4}, {-1, a.a4}};
    r2 = {{2, hw.m2 - a.a1}, {-2, a.a1 - h}, {-1, h}};
  } else if (a.a2 >= hw.m1) {
    int h = (a.a2 - hw.m1) / 2;
    r1 = {{1, hw.m2 - h}, {2, hw.m1 - a.a3 + h}, {-2, a.a3 - a.a4}, {-1, a.a4}};
    r2 = {{2, hw.m2 - a.a1}, {-2, a.a1 - h}, {-1, h}};
  } else {
    r1 = {{1, hw.m1 + hw.m2 - a.a2}, {2, a.a2 - a.a3}, {-2, a.a3 - a.a4}, {-1, a.a4}};
    r2 = {{2, hw.m2 - a.a1}, {-2, a.a1}};
  }
  Tableau t;
  t.n = 2;
  for (const auto& counts : {r1, r2}) {
    std::vector<Entry> row;
    for (auto [v, c] : counts) {
      if (c < 0) throw std::logic_error("negative entry count in tuple_to_tableau");
      row.insert(row.end(), c, v);
    }
    if (!row.empty()) t.rows.push_back(std::move(row));
  }
  if (!is_kn_sp4(t)) {
    throw std::logic_error("tuple_to_tableau produced a non-KN tableau");
  }
  return t;
}

VermaTuple tableau_to_tuple(const Tableau& t) {
  if (!is_kn_sp4(t)) {
    throw std::invalid_argument("tableau_to_tuple requires a KN tableau");
  }
  auto count_above = [&](int row, Entry threshold) {
    if (row >= static_cast<int>(t.rows.size())) return 0;
    int c = 0;
    for (Entry v : t.rows[row]) {
      if (entry_compare(v, threshold, 2) > 0) ++c;
    }
    return c;
  };
  VermaTuple a;
  a.a1 = count_above(1, 2);
  a.a2 = count_above(0, 1) + count_above(1, -2);
  a.a3 = count_above(0, 2);
  a.a4 = count_above(0, -2);
  return a;
}

WeightVec verma_weight(VermaTuple a, HighestWeight hw) {
  return {hw.m1 + hw.m2 - a.a2 - a.a4,
          hw.m2 - 2L * a.a1 + a.a2 - 2L * a.a3 + a.a4};
}

std::string monomial_string(VermaTuple a) {
  std::string s;
  auto factor = [&](const char* f, int e) {
    if (e == 0) return;
    s += f;
    if (e > 1) s += "^" + std::to_string(e);
    s += ' ';
  };
  factor("f1", a.a4);
  factor("f2", a.a3);
  factor("f1", a.a2);
  factor("f2", a.a1);
  s += 'v';
  return s;
}

}  // namespace sympverma
