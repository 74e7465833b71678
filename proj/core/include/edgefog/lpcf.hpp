#pragma once

// Least-processing-cost-first solver.  Three stages:
//   1. a linear assignment on the processing cost matrix fixes the optimal
//      processing cost and a base assignment;
//   2. devices of equal power and jobs of equal size induce equivalence
//      classes; permuting within classes leaves processing cost unchanged.
//      The closure of those moves around the base is the reduced space: all
//      assignments that place, for every (job class, device class) pair, the
//      same number of jobs as the base does;
//   3. network cost is minimized over that reduced space with an
//      incumbent-pruned depth-first scan.

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "edgefog/budget.hpp"
#include "edgefog/model.hpp"

namespace edgefog {

struct EquivalenceClasses {
  // Classes ordered by ascending power/size; members ascending.  Singleton
  // classes included.
  std::vector<std::vector<int>> device_classes;
  std::vector<std::vector<int>> job_classes;
};

// Group device indices by exact power equality and job indices by exact size
// equality (bit-level double comparison, no tolerance).
EquivalenceClasses equivalence_classes(const Instance& inst);

// Number of distinct assignments reachable from `base` by permuting within
// device classes and within job classes, i.e. the closure of both move
// families.  Computed exactly via the per-class counting formula; saturates
// at UINT64_MAX when the count does not fit 64 bits.
std::uint64_t reduced_space_size(const EquivalenceClasses& classes,
                                 const std::vector<int>& base);

// Stream every member of the reduced space exactly once: `base` first, the
// rest in lexicographic order.  The visitor returns false to stop early.
// Every yielded assignment has the same processing cost as the base.
void enumerate_orbit(const EquivalenceClasses& classes,
                     const std::vector<int>& base,
                     const std::function<bool(const std::vector<int>&)>& visit);

struct LpcfReport {
  Assignment best;
  double lap_value = 0.0;  // optimal processing cost; equals
                           // best.processing_cost bit-for-bit
  std::uint64_t reduced_space_size = 0;
  bool space_exhausted = false;  // stage-3 scan ran to completion
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double, std::milli> wall_time{0.0};
};

// Run all three stages.  The scan walks the reduced space in lexicographic
// order pruning states whose committed network cost already meets the
// incumbent, so ties resolve toward the lexicographically smallest
// assignment.  On budget exhaustion the incumbent (or the base assignment if
// no leaf was reached) is returned with space_exhausted = false.
LpcfReport solve_lpcf(const Instance& inst, const SolverBudget& budget = {});

}  // namespace edgefog
