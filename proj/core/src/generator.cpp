#include "edgefog/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "edgefog/rng.hpp"

namespace edgefog {

namespace {

void check_range(const IntRange& r, const char* name) {
  if (r.lo < 1 || r.hi < r.lo)
    throw ParamInvalid(std::string(name) + " must satisfy 1 <= lo <= hi, got [" +
                       std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]");
}

void check_density(double d, const char* name) {
  if (!(d >= 0.0 && d <= 1.0))
    throw ParamInvalid(std::string(name) + " must lie in [0, 1], got " +
                       std::to_string(d));
}

void validate(const GenParams& p) {
  if (p.n_total < 1)
    throw ParamInvalid("n_total must be >= 1, got " + std::to_string(p.n_total));
  if (!(p.edge_fraction >= 0.0) || !(p.fog_fraction >= 0.0) ||
      std::abs(p.edge_fraction + p.fog_fraction - 1.0) > 1e-9)
    throw ParamInvalid("edge_fraction and fog_fraction must be non-negative and sum to 1");
  check_density(p.edge_density, "edge_density");
  check_density(p.fog_density, "fog_density");
  check_density(p.inter_density, "inter_density");
  check_density(p.dep_density, "dep_density");
  check_range(p.edge_power, "edge_power");
  check_range(p.fog_power, "fog_power");
  check_range(p.job_size, "job_size");
  check_range(p.cost_edge_edge, "cost_edge_edge");
  check_range(p.cost_fog_fog, "cost_fog_fog");
  check_range(p.cost_edge_fog, "cost_edge_fog");
}

struct LayerPair {
  double density;
  IntRange cost;
};

LayerPair layer_pair(const GenParams& p, Layer la, Layer lb) {
  if (la == Layer::edge && lb == Layer::edge) return {p.edge_density, p.cost_edge_edge};
  if (la == Layer::fog && lb == Layer::fog) return {p.fog_density, p.cost_fog_fog};
  return {p.inter_density, p.cost_edge_fog};
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Generated generate(const GenParams& p) {
  validate(p);

  const int n = p.n_total;
  const int n_edge = static_cast<int>(std::floor(n * p.edge_fraction + 0.5));

  std::mt19937_64 rng(p.seed);

  Generated out;
  out.rg.devices.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n_edge; ++i)
    out.rg.devices.push_back(
        {i, Layer::edge, static_cast<double>(uniform_int(rng, p.edge_power.lo, p.edge_power.hi))});
  for (int i = n_edge; i < n; ++i)
    out.rg.devices.push_back(
        {i, Layer::fog, static_cast<double>(uniform_int(rng, p.fog_power.lo, p.fog_power.hi))});

  out.jg.jobs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out.jg.jobs.push_back(
        {i, static_cast<double>(uniform_int(rng, p.job_size.lo, p.job_size.hi))});

  UnionFind uf(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const LayerPair lp = layer_pair(p, out.rg.devices[a].layer, out.rg.devices[b].layer);
      if (uniform01(rng) < lp.density) {
        const double cost = static_cast<double>(uniform_int(rng, lp.cost.lo, lp.cost.hi));
        out.rg.links.push_back({a, b, cost});
        uf.unite(a, b);
      }
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (uniform01(rng) < p.dep_density) out.jg.deps.push_back({a, b, 1.0});

  // Repair a disconnected link graph by adding absent pairs in ascending
  // (worst-case cost, a, b) order, Kruskal style, each at its layer pair's
  // maximum cost.  This only ever adds links, so sampled ones are untouched.
  if (n > 1) {
    struct Candidate {
      double cost;
      int a, b;
    };
    std::vector<Candidate> cands;
    std::vector<bool> present(static_cast<std::size_t>(n) * n, false);
    for (const Link& l : out.rg.links)
      present[static_cast<std::size_t>(l.a) * n + l.b] =
          present[static_cast<std::size_t>(l.b) * n + l.a] = true;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (present[static_cast<std::size_t>(a) * n + b]) continue;
        const LayerPair lp = layer_pair(p, out.rg.devices[a].layer, out.rg.devices[b].layer);
        cands.push_back({static_cast<double>(lp.cost.hi), a, b});
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
      if (x.cost != y.cost) return x.cost < y.cost;
      if (x.a != y.a) return x.a < y.a;
      return x.b < y.b;
    });
    for (const Candidate& c : cands) {
      if (uf.unite(c.a, c.b)) {
        out.rg.links.push_back({c.a, c.b, c.cost});
        out.connectivity_repaired = true;
      }
    }
  }

  return out;
}

std::vector<GenParams> sweep_params(const GenParams& base, const std::string& axis,
                                    const std::vector<double>& values) {
  double GenParams::* field = nullptr;
  if (axis == "edge-density")
    field = &GenParams::edge_density;
  else if (axis == "fog-density")
    field = &GenParams::fog_density;
  else if (axis == "inter-density")
    field = &GenParams::inter_density;
  else if (axis == "dep-density")
    field = &GenParams::dep_density;
  else
    throw ParamInvalid("unknown sweep axis '" + axis + "'");
  std::vector<GenParams> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    check_density(values[i], "sweep value");
    GenParams pt = base;
    pt.*field = values[i];
    pt.seed = base.seed + i;
    validate(pt);
    out.push_back(pt);
  }
  return out;
}

}  // namespace edgefog
