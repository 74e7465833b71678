#pragma once

// Wall-clock / node-count limits shared by the search-based solvers.  Node
// limits make truncated runs machine-independent; time limits do not.

#include <chrono>
#include <cstdint>
#include <optional>

namespace edgefog {

struct SolverBudget {
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<std::uint64_t> node_limit;
};

namespace detail {

// Checked once per node expansion, so a run overshoots its limit by at most
// one node's worth of work.
class BudgetClock {
 public:
  explicit BudgetClock(const SolverBudget& budget)
      : start_(std::chrono::steady_clock::now()), budget_(budget) {}

  bool exhausted(std::uint64_t nodes) const {
    if (budget_.node_limit && nodes >= *budget_.node_limit) return true;
    if (budget_.time_limit &&
        std::chrono::steady_clock::now() - start_ >= *budget_.time_limit)
      return true;
    return false;
  }

  std::chrono::duration<double, std::milli> elapsed() const {
    return std::chrono::steady_clock::now() - start_;
  }

 private:
  std::chrono::steady_clock::time_point start_;
  SolverBudget budget_;
};

}  // namespace detail
}  // namespace edgefog
