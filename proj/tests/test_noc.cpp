#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <random>

#include "edgefog/noc.hpp"
#include "oracles.hpp"

using namespace edgefog;

namespace {

bool is_bijection(const std::vector<int>& f, int n) {
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const int v : f) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<int> lex_first_optimum(const Instance& inst) {
  const double best = oracle::noc_min(inst);
  std::vector<int> first;
  oracle::for_each_permutation(inst.n, [&](const std::vector<int>& p) {
    if (first.empty() && oracle::network_cost_arcs(inst, p) <= best + 1e-12) first = p;
  });
  return first;
}

}  // namespace

TEST_CASE("single job instance is trivially optimal") {
  const Instance inst = make_instance({2}, {3}, Matrix(1), Matrix(1));
  for (const NocReport& r : {solve_noc_exhaustive(inst), solve_noc_bnb(inst)}) {
    CHECK(r.best.device_of_job == std::vector<int>{0});
    CHECK(r.best.network_cost == 0.0);
    CHECK(r.proven_optimal);
  }
}

TEST_CASE("no dependences: exhaustive returns the first permutation") {
  std::mt19937_64 rng(31);
  const Instance inst = oracle::random_instance(rng, 5, /*dep_prob=*/0.0);
  const NocReport r = solve_noc_exhaustive(inst);
  CHECK(r.best.network_cost == 0.0);
  CHECK(r.best.device_of_job == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(r.proven_optimal);
}

TEST_CASE("no dependences: branch and bound proves optimality in linear nodes") {
  std::mt19937_64 rng(37);
  const Instance inst = oracle::random_instance(rng, 8, /*dep_prob=*/0.0);
  const NocReport r = solve_noc_bnb(inst);
  CHECK(r.best.network_cost == 0.0);
  CHECK(r.proven_optimal);
  CHECK(r.nodes_explored <= 2 * 8 + 2);
}

TEST_CASE("exhaustive search matches an independent permutation loop") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 30; ++it) {
    const Instance inst = oracle::random_instance(rng, 6);
    const NocReport r = solve_noc_exhaustive(inst);
    CHECK(r.proven_optimal);
    CHECK(r.best.network_cost == oracle::noc_min(inst));
    CHECK(r.nodes_explored == 720);
  }
}

TEST_CASE("generated instances agree with the oracle too") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = oracle::gen_norm(6, seed);
    CHECK(solve_noc_exhaustive(inst).best.network_cost == oracle::noc_min(inst));
  }
}

TEST_CASE("exhaustive ties break toward the lexicographically smaller permutation") {
  // All distances equal: every permutation ties, identity is lex-first.
  Matrix d(3), j(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) d(a, b) = 2.0;
  j(0, 1) = j(1, 0) = 1.0;
  const Instance flat = make_instance({1, 1, 1}, {1, 1, 1}, d, j);
  CHECK(solve_noc_exhaustive(flat).best.device_of_job == std::vector<int>{0, 1, 2});

  std::mt19937_64 rng(43);
  for (int it = 0; it < 20; ++it) {
    const Instance inst = oracle::random_instance(rng, 6, /*dep_prob=*/0.3);
    CHECK(solve_noc_exhaustive(inst).best.device_of_job == lex_first_optimum(inst));
  }
}

TEST_CASE("branch and bound agrees with exhaustive search") {
  std::mt19937_64 rng(47);
  for (int n = 4; n <= 8; ++n)
    for (int it = 0; it < 30; ++it) {
      const Instance inst = oracle::random_instance(rng, n, /*dep_prob=*/0.9);
      const NocReport ex = solve_noc_exhaustive(inst);
      const NocReport bb = solve_noc_bnb(inst);
      CHECK(bb.proven_optimal);
      CHECK(bb.best.network_cost == ex.best.network_cost);
      CHECK(is_bijection(bb.best.device_of_job, n));
    }
}

TEST_CASE("node budgets cap exploration and keep a valid incumbent") {
  const Instance inst = oracle::gen_norm(10, 7);
  SolverBudget budget;
  budget.node_limit = 1000;
  for (const NocReport& r : {solve_noc_exhaustive(inst, budget), solve_noc_bnb(inst, budget)}) {
    CHECK_FALSE(r.proven_optimal);
    CHECK(r.nodes_explored <= 1000);
    CHECK(is_bijection(r.best.device_of_job, inst.n));
    CHECK(r.best.network_cost == network_cost(inst, r.best.device_of_job));
  }
}

TEST_CASE("time budgets are respected within node granularity") {
  const Instance inst = oracle::gen_norm(12, 9);
  SolverBudget budget;
  budget.time_limit = std::chrono::milliseconds(50);
  for (const NocReport& r : {solve_noc_exhaustive(inst, budget), solve_noc_bnb(inst, budget)}) {
    CHECK_FALSE(r.proven_optimal);
    CHECK(r.wall_time.count() < 50.0 + 50.0);  // generous slack for scheduler noise
    CHECK(is_bijection(r.best.device_of_job, inst.n));
  }
}

TEST_CASE("incumbents improve monotonically with larger node budgets") {
  const Instance inst = oracle::gen_norm(9, 21);
  double prev = std::numeric_limits<double>::infinity();
  for (const std::uint64_t limit : {50ULL, 500ULL, 5000ULL, 50000ULL}) {
    SolverBudget budget;
    budget.node_limit = limit;
    const NocReport r = solve_noc_bnb(inst, budget);
    CHECK(r.best.network_cost <= prev);
    prev = r.best.network_cost;
  }
}

TEST_CASE("a truncated run's incumbent never beats the true optimum") {
  // Anchor for budget-truncated quality on one pinned larger instance; the
  // optimum comes from the independent recursive oracle.
  const Instance inst = oracle::gen_norm(11, 4242);
  const double optimum = oracle::noc_min(inst);
  SolverBudget budget;
  budget.node_limit = 50000;
  const NocReport bb = solve_noc_bnb(inst, budget);
  CHECK_FALSE(bb.proven_optimal);
  CHECK(bb.best.network_cost >= optimum);
  const NocReport ex = solve_noc_exhaustive(inst, budget);
  CHECK_FALSE(ex.proven_optimal);
  CHECK(ex.best.network_cost >= optimum);
}

TEST_CASE("reports are deterministic") {
  const Instance inst = oracle::gen_norm(8, 64);
  SolverBudget budget;
  budget.node_limit = 2000;
  const NocReport a = solve_noc_bnb(inst, budget);
  const NocReport b = solve_noc_bnb(inst, budget);
  CHECK(a.best.device_of_job == b.best.device_of_job);
  CHECK(a.best.network_cost == b.best.network_cost);
  CHECK(a.nodes_explored == b.nodes_explored);
}
