#pragma once

// Experiment harness: runs solver grids / parameter sweeps over generated
// instances and serializes the results as CSV.
//
// Rows are keyed so finished work is never redone: run_bench and run_sweep
// take the rows parsed from an existing output file and only compute the
// missing keys, which makes interrupted runs resumable and completed runs
// idempotent.  Output rows are fully sorted regardless of execution order.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edgefog/budget.hpp"
#include "edgefog/generator.hpp"

namespace edgefog {

inline constexpr const char* kBenchSolvers[] = {"lap", "lpcf", "noc-perm", "noc-bnb"};

struct ExperimentSpec {
  std::vector<int> sizes;            // instance sizes (n)
  std::vector<std::string> solvers;  // subset of kBenchSolvers
  int seeds = 1;                     // replicates per size
  GenParams params;                  // template; n_total is overwritten per
                                     // size, params.seed + s seeds replicate s
  SolverBudget budget;               // applied to lpcf / noc solvers
};

struct ResultRow {
  int n = 0;
  std::string solver;
  std::uint64_t seed = 0;  // the generator seed actually used
  double wall_time_ms = 0.0;
  double processing_cost = 0.0;
  double network_cost = 0.0;
  bool complete = false;  // search finished (not budget-truncated)
  std::optional<std::uint64_t> reduced_space_size;  // lpcf only
};

// "n,solver,seed,wall_time_ms,processing_cost,network_cost,complete,reduced_space_size"
const std::string& result_csv_header();
std::string to_csv(const ResultRow& row);
// Expects the pinned header on the first line.
std::vector<ResultRow> parse_result_csv(const std::string& text);

// Runs every (n, solver, replicate) cell not already covered by `existing`
// and returns the union, sorted by (n, solver, seed).  `on_row` (optional)
// observes each newly computed row as soon as it exists.
std::vector<ResultRow> run_bench(const ExperimentSpec& spec,
                                 std::vector<ResultRow> existing = {},
                                 const std::function<void(const ResultRow&)>& on_row = {});

struct SweepSpec {
  GenParams base;    // n_total is the instance size for every point
  std::string axis;  // see sweep_params
  std::vector<double> values;
  int seeds = 1;  // replicates per point
  SolverBudget budget;
};

// One sweep point, aggregated over replicates of the lexicographic
// postprocessing solver.
struct SweepRow {
  std::string axis;
  double value = 0.0;
  int n = 0;
  int seeds = 0;
  double mean_network_cost = 0.0;
  double stddev_network_cost = 0.0;  // sample stddev, 0 for a single replicate
};

// "axis,value,n,seeds,mean_network_cost,stddev_network_cost"
const std::string& sweep_csv_header();
std::string to_csv(const SweepRow& row);
std::vector<SweepRow> parse_sweep_csv(const std::string& text);

std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::vector<SweepRow> existing = {},
                                const std::function<void(const SweepRow&)>& on_row = {});

// Shortest round-tripping decimal form (std::to_chars); integral values have
// no trailing ".0".  All CSV numerics go through this.
std::string format_double(double v);

}  // namespace edgefog
