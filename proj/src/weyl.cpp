#include "sympverma/weyl.hpp"

#include <stdexcept>
#include <string>

namespace sympverma {

long long weyl_dim(int l1, int l2) {
  if (l2 < 0 || l1 < l2) {
    throw std::invalid_argument("(" + std::to_string(l1) + "," +
                                std::to_string(l2) + ") is not a partition");
  }
  long long v = 1LL * (l1 - l2 + 1) * (l2 + 1) * (l1 + 2) * (l1 + l2 + 3);
  if (v % 6 != 0) {
    throw std::logic_error("weyl_dim product not divisible by 6");
  }
  return v / 6;
}

}  // namespace sympverma
