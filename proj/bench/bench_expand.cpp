// Wall-time comparison of the two Verma expansion paths: the serial
// reference (each tuple expanded independently) against the grouped kernel
// (shared monomial prefixes, OpenMP across exponent groups). Also checks
// they produce identical vectors.

#include "sympverma/tensor.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace sympverma;

static double run_ms(HighestWeight hw, ExecMode mode, std::size_t& nnz) {
  auto t0 = std::chrono::steady_clock::now();
  auto rows = expand_all(hw, kDefaultBudget, mode);
  auto t1 = std::chrono::steady_clock::now();
  nnz = 0;
  for (const auto& [a, v] : rows) nnz += v.num_terms();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int main(int argc, char** argv) {
  std::vector<HighestWeight> cases = {{2, 2}, {1, 3}, {3, 2}, {4, 2}};
  if (argc == 3) {
    cases = {{std::atoi(argv[1]), std::atoi(argv[2])}};
  }
  std::printf("%6s %8s %12s %12s %12s %8s\n", "hw", "tuples", "nnz", "serial_ms",
              "grouped_ms", "speedup");
  for (HighestWeight hw : cases) {
    auto serial = expand_all(hw, kDefaultBudget, ExecMode::serial);
    auto grouped = expand_all(hw, kDefaultBudget, ExecMode::parallel);
    if (serial != grouped) {
      std::fprintf(stderr, "(%d,%d): serial and grouped expansions disagree\n",
                   hw.m1, hw.m2);
      return 1;
    }
    std::size_t nnz = 0;
    double ms_s = run_ms(hw, ExecMode::serial, nnz);
    double ms_p = run_ms(hw, ExecMode::parallel, nnz);
    std::printf("(%2d,%2d) %8zu %12zu %12.1f %12.1f %8.2f\n", hw.m1, hw.m2,
                serial.size(), nnz, ms_s, ms_p, ms_s / ms_p);
  }
  return 0;
}
