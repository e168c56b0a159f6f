#pragma once

namespace sympverma {

// dim of the irreducible C2 module with partition (l1, l2), l1 >= l2 >= 0.
// Product over positive roots; always divisible by 6.
long long weyl_dim(int l1, int l2);

}  // namespace sympverma
