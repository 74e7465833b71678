#pragma once

// Linear assignment: minimize the sum of one matrix entry per row, over all
// row -> column bijections.

#include <vector>

#include "edgefog/model.hpp"

namespace edgefog {

// Square cost matrix, row-major.  Construction rejects non-square data.
struct CostMatrix {
  int n = 0;
  std::vector<double> entries;  // n * n, entries[i * n + j]

  CostMatrix() = default;
  CostMatrix(int n, std::vector<double> entries);

  double at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
};

// entries[i][j] = job_size[i] / device_power[j].
CostMatrix build_processing_matrix(const Instance& inst);

struct LapResult {
  std::vector<int> col_of_row;  // optimal bijection
  // Sum of the selected entries, accumulated in ascending value order (the
  // same reduction processing_cost uses, so the two agree bit-for-bit).
  double value = 0.0;
};

// O(n^3) shortest-augmenting-path algorithm with potentials.  Deterministic:
// ties are resolved by a fixed scan order, so equal inputs give equal
// outputs.
LapResult solve_lap(const CostMatrix& m);

}  // namespace edgefog
