#include "edgefog/lpcf.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>

#include "edgefog/lap.hpp"

namespace edgefog {

namespace {

constexpr std::uint64_t kSaturated = UINT64_MAX;

std::vector<std::vector<int>> group_by_value(const std::vector<double>& vals) {
  std::map<double, std::vector<int>> by_value;
  for (int i = 0; i < static_cast<int>(vals.size()); ++i)
    by_value[vals[i]].push_back(i);
  std::vector<std::vector<int>> classes;
  classes.reserve(by_value.size());
  for (auto& [value, members] : by_value) classes.push_back(std::move(members));
  return classes;
}

std::vector<int> class_of(const std::vector<std::vector<int>>& classes, int n) {
  std::vector<int> out(n, -1);
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    for (int member : classes[c]) out[member] = c;
  return out;
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a == kSaturated || b == kSaturated) return kSaturated;
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  return r > kSaturated ? kSaturated : static_cast<std::uint64_t>(r);
}

// C(n, k) with sticky saturation; partial products are monotone so the cap
// can be applied per step.
std::uint64_t binom_sat(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 res = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    res = res * (n - k + i) / i;
    if (res > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(res);
}

std::uint64_t factorial_sat(std::uint64_t n) {
  std::uint64_t res = 1;
  for (std::uint64_t i = 2; i <= n; ++i) res = mul_sat(res, i);
  return res;
}

// Per-class placement quotas of the base assignment: how many members of
// each job class the base sends into each device class.  The reduced space
// is exactly the set of assignments sharing these quotas.
std::vector<std::vector<int>> base_quotas(const EquivalenceClasses& classes,
                                          const std::vector<int>& base) {
  const int n = static_cast<int>(base.size());
  const std::vector<int> jc = class_of(classes.job_classes, n);
  const std::vector<int> dc = class_of(classes.device_classes, n);
  std::vector<std::vector<int>> quota(
      classes.job_classes.size(),
      std::vector<int>(classes.device_classes.size(), 0));
  for (int i = 0; i < n; ++i) ++quota[jc[i]][dc[base[i]]];
  return quota;
}

}  // namespace

EquivalenceClasses equivalence_classes(const Instance& inst) {
  EquivalenceClasses c;
  c.device_classes = group_by_value(inst.device_power);
  c.job_classes = group_by_value(inst.job_size);
  return c;
}

std::uint64_t reduced_space_size(const EquivalenceClasses& classes,
                                 const std::vector<int>& base) {
  const auto quota = base_quotas(classes, base);

  // Ways to pick which members of each job class fill its quotas, times the
  // arrangements of each device class's incoming jobs onto its devices.
  std::uint64_t total = 1;
  for (size_t a = 0; a < classes.job_classes.size(); ++a) {
    std::uint64_t remaining = classes.job_classes[a].size();
    for (size_t b = 0; b < classes.device_classes.size(); ++b) {
      const std::uint64_t c = quota[a][b];
      if (c == 0) continue;
      total = mul_sat(total, binom_sat(remaining, c));
      remaining -= c;
    }
  }
  for (const auto& dc : classes.device_classes)
    total = mul_sat(total, factorial_sat(dc.size()));
  return total;
}

namespace {

// Duplicate-free walk of the reduced space: jobs are decided in index order
// and each complete assignment corresponds to a unique decision path, so
// leaves arrive in lexicographic order without any dedup set.
struct OrbitWalk {
  int n;
  std::vector<int> jc;  // job -> job class
  std::vector<int> dc;  // device -> device class
  std::vector<std::vector<int>> quota;
  std::vector<char> used;
  std::vector<int> f;

  OrbitWalk(const EquivalenceClasses& classes, const std::vector<int>& base)
      : n(static_cast<int>(base.size())),
        jc(class_of(classes.job_classes, n)),
        dc(class_of(classes.device_classes, n)),
        quota(base_quotas(classes, base)),
        used(n, 0),
        f(n, -1) {}
};

bool orbit_dfs(OrbitWalk& w, int job,
               const std::function<bool(const std::vector<int>&)>& leaf) {
  if (job == w.n) return leaf(w.f);
  auto& row = w.quota[w.jc[job]];
  for (int dev = 0; dev < w.n; ++dev) {
    if (w.used[dev] || row[w.dc[dev]] == 0) continue;
    w.used[dev] = 1;
    --row[w.dc[dev]];
    w.f[job] = dev;
    const bool go_on = orbit_dfs(w, job + 1, leaf);
    w.f[job] = -1;
    ++row[w.dc[dev]];
    w.used[dev] = 0;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void enumerate_orbit(
    const EquivalenceClasses& classes, const std::vector<int>& base,
    const std::function<bool(const std::vector<int>&)>& visit) {
  if (!visit(base)) return;
  OrbitWalk w(classes, base);
  orbit_dfs(w, 0, [&](const std::vector<int>& f) {
    if (f == base) return true;  // already yielded up front
    return visit(f);
  });
}

namespace {

// Stage-3 scan.  Same walk as enumerate_orbit but with incremental committed
// network cost and incumbent pruning.  Because leaves arrive in
// lexicographic order and pruning only cuts states whose committed cost
// already reaches the incumbent, the first leaf attaining the optimal value
// is the lexicographically smallest one, and later ties are never accepted.
struct LpcfScan {
  const Instance& inst;
  OrbitWalk walk;
  detail::BudgetClock clock;
  std::vector<std::vector<std::pair<int, double>>> back_deps;  // j < i only
  std::vector<int> best_perm;
  double best_cost = std::numeric_limits<double>::infinity();
  std::uint64_t nodes = 0;
  bool stopped = false;

  LpcfScan(const Instance& i, const EquivalenceClasses& classes,
           const std::vector<int>& base, const SolverBudget& budget)
      : inst(i), walk(classes, base), clock(budget) {
    back_deps.assign(inst.n, {});
    for (const DepPair& p : inst.dep_pairs)
      back_deps[p.j].push_back({p.i, p.w});  // p.i < p.j
  }

  void dfs(int job, double committed) {
    if (job == inst.n) {
      const double cost = network_cost(inst, walk.f);
      if (cost < best_cost) {
        best_cost = cost;
        best_perm = walk.f;
      }
      return;
    }
    auto& row = walk.quota[walk.jc[job]];
    for (int dev = 0; dev < inst.n; ++dev) {
      if (walk.used[dev] || row[walk.dc[dev]] == 0) continue;
      double added = 0.0;
      for (const auto& [other, w] : back_deps[job])
        added += w * inst.d_conn(dev, walk.f[other]);
      if (committed + added >= best_cost) continue;  // committed-pairs bound
      if (clock.exhausted(nodes)) {
        stopped = true;
        return;
      }
      ++nodes;
      walk.used[dev] = 1;
      --row[walk.dc[dev]];
      walk.f[job] = dev;
      dfs(job + 1, committed + added);
      walk.f[job] = -1;
      ++row[walk.dc[dev]];
      walk.used[dev] = 0;
      if (stopped) return;
    }
  }
};

}  // namespace

LpcfReport solve_lpcf(const Instance& inst, const SolverBudget& budget) {
  detail::BudgetClock clock(budget);

  const LapResult lap = solve_lap(build_processing_matrix(inst));
  const EquivalenceClasses classes = equivalence_classes(inst);

  LpcfReport rep;
  rep.lap_value = lap.value;
  rep.reduced_space_size = reduced_space_size(classes, lap.col_of_row);

  LpcfScan scan(inst, classes, lap.col_of_row, budget);
  scan.dfs(0, 0.0);

  // Budget may die before any leaf; the base is always a valid incumbent.
  std::vector<int> best =
      scan.best_perm.empty() ? lap.col_of_row : std::move(scan.best_perm);
  rep.best = make_assignment(inst, std::move(best));
  rep.space_exhausted = !scan.stopped;
  rep.nodes_explored = scan.nodes;
  rep.wall_time = clock.elapsed();

  // Every reduced-space member keeps the optimal processing cost; the sorted
  // reduction makes this exact.
  assert(rep.best.processing_cost == rep.lap_value);
  return rep;
}

}  // namespace edgefog
