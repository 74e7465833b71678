#include "edgefog/noc.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

namespace edgefog {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

NocReport solve_noc_exhaustive(const Instance& inst,
                               const SolverBudget& budget) {
  detail::BudgetClock clock(budget);
  const int n = inst.n;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  NocReport rep;
  std::vector<int> best_perm = perm;
  double best_cost = network_cost(inst, perm);
  rep.nodes_explored = 1;

  bool stopped = false;
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (clock.exhausted(rep.nodes_explored)) {
      stopped = true;
      break;
    }
    const double cost = network_cost(inst, perm);
    ++rep.nodes_explored;
    // Strict improvement keeps the first optimum seen, i.e. the
    // lexicographically smallest one.
    if (cost < best_cost) {
      best_cost = cost;
      best_perm = perm;
    }
  }

  rep.best = make_assignment(inst, std::move(best_perm));
  rep.proven_optimal = !stopped;
  rep.wall_time = clock.elapsed();
  return rep;
}

namespace {

// Branch-and-bound state for the network-only search.
struct BnbSearch {
  const Instance& inst;
  detail::BudgetClock clock;
  std::vector<int> order;                           // depth -> job
  std::vector<std::vector<std::pair<int, double>>> adj;  // job -> (dep job, w)
  std::vector<int> f;            // job -> device or -1
  std::vector<char> used;        // device -> taken
  std::vector<int> best_perm;
  double best_cost = kInf;
  std::uint64_t nodes = 0;
  bool stopped = false;

  BnbSearch(const Instance& i, const SolverBudget& b)
      : inst(i),
        clock(b),
        f(i.n, -1),
        used(i.n, 0) {
    // Branch on heavily-connected jobs first.
    std::vector<double> total_dep(inst.n, 0.0);
    for (const DepPair& p : inst.dep_pairs) {
      total_dep[p.i] += p.w;
      total_dep[p.j] += p.w;
    }
    order.resize(inst.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (total_dep[a] != total_dep[b]) return total_dep[a] > total_dep[b];
      return a < b;
    });
    adj.assign(inst.n, {});
    for (const DepPair& p : inst.dep_pairs) {
      adj[p.i].push_back({p.j, p.w});
      adj[p.j].push_back({p.i, p.w});
    }
  }

  // Greedy pairing bound over everything not yet fully committed: sort the
  // undecided dependence weights descending, the distances of
  // still-available device pairs ascending, and pair them off.  Any
  // completion maps distinct undecided pairs to distinct available device
  // pairs, so by the rearrangement inequality this never overestimates.
  double lower_bound() const {
    std::vector<double> weights;
    for (const DepPair& p : inst.dep_pairs)
      if (f[p.i] < 0 || f[p.j] < 0) weights.push_back(p.w);
    if (weights.empty()) return 0.0;
    std::vector<double> dists;
    const int n = inst.n;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (!used[p] || !used[q]) dists.push_back(inst.d_conn(p, q));
    assert(dists.size() >= weights.size());
    std::sort(weights.begin(), weights.end(), std::greater<>());
    std::partial_sort(dists.begin(), dists.begin() + weights.size(),
                      dists.end());
    double bound = 0.0;
    for (size_t k = 0; k < weights.size(); ++k) bound += weights[k] * dists[k];
    return bound;
  }

  double placement_cost(int job, int dev) const {
    double added = 0.0;
    for (const auto& [other, w] : adj[job])
      if (f[other] >= 0) added += w * inst.d_conn(dev, f[other]);
    return added;
  }

  void dfs(int depth, double committed) {
    if (stopped) return;
    if (committed + lower_bound() >= best_cost) return;
    if (depth == inst.n) {
      // Recompute canonically so values agree bit-for-bit with the
      // exhaustive solver.
      const double cost = network_cost(inst, f);
      if (cost < best_cost) {
        best_cost = cost;
        best_perm = f;
      }
      return;
    }
    const int job = order[depth];
    std::vector<std::pair<double, int>> cands;  // (added cost, device)
    for (int dev = 0; dev < inst.n; ++dev)
      if (!used[dev]) cands.push_back({placement_cost(job, dev), dev});
    std::sort(cands.begin(), cands.end());
    for (const auto& [added, dev] : cands) {
      if (committed + added >= best_cost) continue;  // cheap child cut
      if (clock.exhausted(nodes)) {
        stopped = true;
        return;
      }
      ++nodes;
      f[job] = dev;
      used[dev] = 1;
      dfs(depth + 1, committed + added);
      used[dev] = 0;
      f[job] = -1;
      if (stopped) return;
    }
  }
};

}  // namespace

NocReport solve_noc_bnb(const Instance& inst, const SolverBudget& budget) {
  BnbSearch search(inst, budget);
  search.dfs(0, 0.0);

  if (search.best_perm.empty()) {
    // Budget died before the first leaf: complete the identity greedily so
    // an incumbent always exists.
    search.best_perm.resize(inst.n);
    std::iota(search.best_perm.begin(), search.best_perm.end(), 0);
  }

  NocReport rep;
  rep.best = make_assignment(inst, std::move(search.best_perm));
  rep.proven_optimal = !search.stopped;
  rep.nodes_explored = search.nodes;
  rep.wall_time = search.clock.elapsed();
  return rep;
}

}  // namespace edgefog
