#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace sympverma {

using Int = boost::multiprecision::cpp_int;

// Barred alphabet entry: letter i is +i, letter i-bar is -i, 1 <= i <= n.
using Entry = int;

// Thrown when an operation would exceed the configured state-count budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Position of v in the chain 1 < 2 < ... < n < nbar < ... < 2bar < 1bar,
// counted from 0.
int order_key(Entry v, int n);

// -1 / 0 / +1 under the barred alphabet order.
int entry_compare(Entry x, Entry y, int n);

bool entry_valid(Entry v, int n);

// "1", "2", "2b", "1b" (general n: "k" / "kb").
std::string entry_to_string(Entry v);
Entry entry_from_string(const std::string& s, int n);

struct HighestWeight {
  int m1 = 0;  // multiplicity of omega_1
  int m2 = 0;  // multiplicity of omega_2

  bool operator==(const HighestWeight&) const = default;
};

// lambda = (m1+m2, m2) in epsilon coordinates.
std::pair<int, int> partition_of(HighestWeight hw);

// Weight in epsilon coordinates, c1*eps1 + c2*eps2.
struct WeightVec {
  long c1 = 0;
  long c2 = 0;

  bool operator==(const WeightVec&) const = default;
};

// Exponents of f1^{a4} f2^{a3} f1^{a2} f2^{a1} v, read right to left.
struct VermaTuple {
  int a1 = 0;
  int a2 = 0;
  int a3 = 0;
  int a4 = 0;

  bool operator==(const VermaTuple&) const = default;
  auto operator<=>(const VermaTuple&) const = default;  // lexicographic
};

}  // namespace sympverma
