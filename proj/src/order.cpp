#include "sympverma/order.hpp"

#include <stdexcept>

namespace sympverma {

int pair_order(BoxPair a, BoxPair b) {
  if (a.second != b.second) return a.second > b.second ? -1 : 1;
  return (a.first > b.first) - (a.first < b.first);
}

int tableau_order(const Tableau& y, const Tableau& z) {
  if (y.n != z.n || y.shape() != z.shape()) {
    throw std::invalid_argument("tableau_order requires equal shapes");
  }
  // Boxes sorted ascending under pair_order: columns right to left,
  // top to bottom within a column.
  auto shape = y.shape();
  int ncols = shape.empty() ? 0 : shape[0];
  for (int col = ncols; col >= 1; --col) {
    for (int row = 1; row <= static_cast<int>(shape.size()); ++row) {
      if (shape[row - 1] < col) break;
      int c = entry_compare(y.rows[row - 1][col - 1], z.rows[row - 1][col - 1], y.n);
      if (c != 0) return c;
    }
  }
  return 0;
}

}  // namespace sympverma
