#pragma once

// Data model for assigning interdependent jobs onto a two-layer (edge/fog)
// resource graph: devices with a processing power connected by weighted
// links, and jobs with a size connected by dependence weights.  A solver
// works on the normalized Instance form, where both sides have equal
// cardinality and the link structure has been closed into all-pairs
// shortest-path costs.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgefog {

enum class Layer { edge, fog };

const char* layer_name(Layer layer);
Layer layer_from_name(const std::string& name);

struct Device {
  int id = 0;
  Layer layer = Layer::edge;
  double power = 0.0;  // > 0
};

struct Link {
  int a = 0;
  int b = 0;
  double cost = 0.0;  // > 0
};

struct Job {
  int id = 0;
  double size = 0.0;  // > 0
};

struct Dep {
  int a = 0;
  int b = 0;
  double weight = 1.0;  // > 0
};

struct ResourceGraph {
  std::vector<Device> devices;
  std::vector<Link> links;
};

struct JobGraph {
  std::vector<Job> jobs;
  std::vector<Dep> deps;
};

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A graph with no devices (or a job graph with no jobs) where at least one
// is required.
struct EmptyGraph : Error {
  using Error::Error;
};

// Two devices or two jobs share an id.
struct DuplicateId : Error {
  using Error::Error;
};

// A link or dependence is malformed: unknown endpoint, self-loop, duplicate
// pair, or non-positive cost/weight.
struct InvalidEdge : Error {
  using Error::Error;
};

// No path between two devices, so no finite communication cost exists.
struct UnreachablePair : Error {
  int a;
  int b;
  UnreachablePair(int a, int b);
};

// Vector/matrix extents do not agree.
struct DimensionMismatch : Error {
  using Error::Error;
};

// A parameter is outside its documented domain.
struct ParamInvalid : Error {
  using Error::Error;
};

// A document could not be parsed; the message carries field or offset
// context.
struct ParseError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Dense square matrix of doubles, row-major.

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n, double fill = 0.0);

  int size() const { return n_; }
  double& operator()(int i, int j) { return v_[static_cast<size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return v_[static_cast<size_t>(i) * n_ + j]; }

  bool operator==(const Matrix&) const = default;

 private:
  int n_ = 0;
  std::vector<double> v_;
};

// One dependent job pair (i < j) with its weight; cached upper triangle of
// j_conn so solvers can iterate dependencies without scanning the matrix.
struct DepPair {
  int i;
  int j;
  double w;
};

// Solver-ready problem: exactly n jobs and n device slots, identified by
// index.  d_conn is the shortest-path closure of the link graph (zero
// diagonal, symmetric, triangle inequality holds); j_conn holds symmetric
// dependence weights with a zero diagonal.
//
// device_id maps a device index back to the physical device it came from.
// When a device was split into virtual copies the copies share the parent's
// id and have d_conn zero between each other.
struct Instance {
  int n = 0;
  std::vector<double> device_power;  // by device index, > 0
  std::vector<double> job_size;      // by job index, > 0
  Matrix d_conn;
  Matrix j_conn;
  std::vector<int> device_id;  // device index -> physical device id
  std::vector<int> job_id;     // job index -> job id
  std::vector<DepPair> dep_pairs;
};

// A complete job -> device mapping with its two cost figures attached.
struct Assignment {
  std::vector<int> device_of_job;  // f: job index -> device index, bijective
  double processing_cost = 0.0;
  double network_cost = 0.0;
};

// ---------------------------------------------------------------------------
// Cost operations

// Sum of job_size[i] / device_power[f[i]] over all jobs.  Terms are
// accumulated in ascending value order, which makes the result a function of
// the term multiset alone: assignments that only permute equal-power devices
// or equal-size jobs produce bit-identical costs.
double processing_cost(const Instance& inst, const std::vector<int>& f);

// Sum over unordered dependent job pairs {i, j} of
// j_conn(i, j) * d_conn(f(i), f(j)); each dependent pair counts once.
double network_cost(const Instance& inst, const std::vector<int>& f);

// Bundle f with both cost figures computed from inst.  Throws ParamInvalid
// unless f is a bijection on [0, n) — the raw cost operations above assume
// that precondition instead of checking it.
Assignment make_assignment(const Instance& inst, std::vector<int> f);

// ---------------------------------------------------------------------------
// Normalization

// All-pairs shortest-path closure of the link graph.  Rows/columns are
// ordered by ascending device id.  Throws UnreachablePair if the graph is
// disconnected, EmptyGraph/DuplicateId/InvalidEdge on malformed input.
Matrix effective_connectivity(const ResourceGraph& rg);

// Produce the solver-ready Instance:
//  * equal cardinality: identity mapping of devices to slots;
//  * more devices than jobs: superfluous devices are dropped, lowest power
//    first, ties broken by higher summed incident link cost, then by higher
//    id.  Dropped devices still forward traffic: the closure is computed on
//    the full graph before rows are removed;
//  * more jobs than devices: devices are split into virtual copies, awarded
//    round-robin in descending power order (ties by ascending id).  A copy
//    keeps the full parent power; copies of one parent communicate at cost
//    zero and inherit the parent's closure row otherwise.
// Devices and jobs are indexed in ascending id order (virtual copies sit
// next to their parent).
Instance normalize_instance(const ResourceGraph& rg, const JobGraph& jg);

// Build an Instance directly from matrices (tests, ad-hoc experiments).
// Validates symmetry, zero diagonals and positivity; device/job ids default
// to 0..n-1.
Instance make_instance(std::vector<double> device_power,
                       std::vector<double> job_size,
                       Matrix d_conn,
                       Matrix j_conn);

}  // namespace edgefog
