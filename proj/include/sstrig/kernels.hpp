#pragma once

#include <cstdint>
#include <vector>

#include "sstrig/groebner.hpp"

namespace sstrig {

using Point = std::vector<Fe>;

struct NumericStats {
  std::uint64_t nodes = 0;   // partial assignments visited
  std::uint64_t leaves = 0;  // full assignments reached
};

// Every point of K^n (n = nvars of the system) where all of S vanish, by
// evaluating each polynomial at each point. Reference for the kernels below.
std::vector<Point> numeric_roots_reference(const PolyList& S, int n, const Field* K);

// Same set, by assigning variables 0, 1, ... in turn and specializing; a branch
// dies as soon as some polynomial becomes a nonzero constant. `parallel`
// spreads the values of variable 0 over OpenMP threads. Output is sorted.
std::vector<Point> numeric_roots(const PolyList& S, int n, const Field* K, bool parallel = false,
                                 NumericStats* stats = nullptr);

}  // namespace sstrig
