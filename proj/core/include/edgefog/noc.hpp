#pragma once

// Network-only-cost solvers: minimize network_cost over all job -> device
// bijections, ignoring processing cost.  The exhaustive solver enumerates
// every permutation; the branch-and-bound solver prunes with an admissible
// lower bound and reaches the same optimal value.

#include <chrono>
#include <cstdint>

#include "edgefog/budget.hpp"
#include "edgefog/model.hpp"

namespace edgefog {

struct NocReport {
  Assignment best;
  bool proven_optimal = false;  // search ran to completion
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double, std::milli> wall_time{0.0};
};

// Lexicographic enumeration of all n! permutations.  Ties on cost keep the
// lexicographically smaller permutation.  A node is one evaluated
// permutation.  With no budget the run always completes.
NocReport solve_noc_exhaustive(const Instance& inst,
                               const SolverBudget& budget = {});

// Depth-first branch and bound.  Jobs are branched in descending
// total-dependence order; candidate devices are tried in ascending
// resulting-partial-cost order.  A node is pruned when
//   committed cost + lower bound >= incumbent,
// where the bound greedily pairs the undecided dependence weights (sorted
// descending) with the smallest still-available device distances (sorted
// ascending) -- admissible because any completion maps distinct dependent
// pairs to distinct available device pairs.  A node is one attempted job
// placement.
NocReport solve_noc_bnb(const Instance& inst, const SolverBudget& budget = {});

}  // namespace edgefog
