#include "sympverma/core.hpp"

#include <cctype>
#include <cstdlib>

namespace sympverma {

bool entry_valid(Entry v, int n) {
  return v != 0 && std::abs(v) <= n;
}

int order_key(Entry v, int n) {
  if (!entry_valid(v, n)) {
    throw std::invalid_argument("entry " + std::to_string(v) +
                                " out of rank " + std::to_string(n));
  }
  return v > 0 ? v - 1 : 2 * n + v;  // v < 0: 2n - |v|
}

int entry_compare(Entry x, Entry y, int n) {
  int kx = order_key(x, n), ky = order_key(y, n);
  return (kx > ky) - (kx < ky);
}

std::string entry_to_string(Entry v) {
  std::string s = std::to_string(std::abs(v));
  if (v < 0) s += 'b';
  return s;
}

Entry entry_from_string(const std::string& s, int n) {
  bool barred = !s.empty() && s.back() == 'b';
  std::string digits = barred ? s.substr(0, s.size() - 1) : s;
  if (digits.empty() || digits.size() > 2) {
    throw std::invalid_argument("bad entry '" + s + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bad entry '" + s + "'");
    }
  }
  int i = std::stoi(digits);
  if (i < 1 || i > n) {
    throw std::invalid_argument("entry '" + s + "' out of rank " +
                                std::to_string(n));
  }
  return barred ? -i : i;
}

std::pair<int, int> partition_of(HighestWeight hw) {
  if (hw.m1 < 0 || hw.m2 < 0) {
    throw std::invalid_argument("highest weight multiplicities must be >= 0");
  }
  return {hw.m1 + hw.m2, hw.m2};
}

}  // namespace sympverma
