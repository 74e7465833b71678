#include "edgefog/model.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace edgefog {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_resource_graph(const ResourceGraph& rg) {
  if (rg.devices.empty()) throw EmptyGraph("resource graph has no devices");
  std::set<int> ids;
  for (const Device& d : rg.devices) {
    if (!ids.insert(d.id).second)
      throw DuplicateId("duplicate device id " + std::to_string(d.id));
    if (!(d.power > 0.0))
      throw InvalidEdge("device " + std::to_string(d.id) +
                        " has non-positive power");
  }
  std::set<std::pair<int, int>> seen;
  for (const Link& l : rg.links) {
    if (!ids.count(l.a) || !ids.count(l.b))
      throw InvalidEdge("link (" + std::to_string(l.a) + ", " +
                        std::to_string(l.b) + ") references an unknown device");
    if (l.a == l.b)
      throw InvalidEdge("self-link on device " + std::to_string(l.a));
    if (!(l.cost > 0.0))
      throw InvalidEdge("link (" + std::to_string(l.a) + ", " +
                        std::to_string(l.b) + ") has non-positive cost");
    auto key = std::minmax(l.a, l.b);
    if (!seen.insert(key).second)
      throw InvalidEdge("duplicate link (" + std::to_string(key.first) + ", " +
                        std::to_string(key.second) + ")");
  }
}

void validate_job_graph(const JobGraph& jg) {
  if (jg.jobs.empty()) throw EmptyGraph("job graph has no jobs");
  std::set<int> ids;
  for (const Job& j : jg.jobs) {
    if (!ids.insert(j.id).second)
      throw DuplicateId("duplicate job id " + std::to_string(j.id));
    if (!(j.size > 0.0))
      throw InvalidEdge("job " + std::to_string(j.id) +
                        " has non-positive size");
  }
  std::set<std::pair<int, int>> seen;
  for (const Dep& d : jg.deps) {
    if (!ids.count(d.a) || !ids.count(d.b))
      throw InvalidEdge("dependence (" + std::to_string(d.a) + ", " +
                        std::to_string(d.b) + ") references an unknown job");
    if (d.a == d.b)
      throw InvalidEdge("self-dependence on job " + std::to_string(d.a));
    if (!(d.weight > 0.0))
      throw InvalidEdge("dependence (" + std::to_string(d.a) + ", " +
                        std::to_string(d.b) + ") has non-positive weight");
    auto key = std::minmax(d.a, d.b);
    if (!seen.insert(key).second)
      throw InvalidEdge("duplicate dependence (" + std::to_string(key.first) +
                        ", " + std::to_string(key.second) + ")");
  }
}

std::vector<DepPair> collect_dep_pairs(const Matrix& j_conn) {
  std::vector<DepPair> out;
  const int n = j_conn.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (j_conn(i, j) > 0.0) out.push_back({i, j, j_conn(i, j)});
  return out;
}

void check_square_symmetric(const Matrix& m, const char* what) {
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    if (m(i, i) != 0.0)
      throw ParamInvalid(std::string(what) + " has a non-zero diagonal entry");
    for (int j = 0; j < n; ++j) {
      if (m(i, j) != m(j, i))
        throw ParamInvalid(std::string(what) + " is not symmetric");
      if (!(m(i, j) >= 0.0))
        throw ParamInvalid(std::string(what) + " has a negative entry");
    }
  }
}

}  // namespace

const char* layer_name(Layer layer) {
  return layer == Layer::edge ? "edge" : "fog";
}

Layer layer_from_name(const std::string& name) {
  if (name == "edge") return Layer::edge;
  if (name == "fog") return Layer::fog;
  throw ParseError("unknown layer \"" + name + "\" (expected edge or fog)");
}

UnreachablePair::UnreachablePair(int a_in, int b_in)
    : Error("no path between devices " + std::to_string(a_in) + " and " +
            std::to_string(b_in)),
      a(a_in),
      b(b_in) {}

Matrix::Matrix(int n, double fill)
    : n_(n), v_(static_cast<size_t>(n) * n, fill) {
  if (n < 0) throw DimensionMismatch("matrix size must be non-negative");
}

double processing_cost(const Instance& inst, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != inst.n)
    throw DimensionMismatch("assignment length does not match instance size");
  std::vector<double> terms(inst.n);
  for (int i = 0; i < inst.n; ++i)
    terms[i] = inst.job_size[i] / inst.device_power[f[i]];
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

double network_cost(const Instance& inst, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != inst.n)
    throw DimensionMismatch("assignment length does not match instance size");
  double sum = 0.0;
  for (const DepPair& p : inst.dep_pairs)
    sum += p.w * inst.d_conn(f[p.i], f[p.j]);
  return sum;
}

Assignment make_assignment(const Instance& inst, std::vector<int> f) {
  if (static_cast<int>(f.size()) != inst.n)
    throw DimensionMismatch("assignment length does not match instance size");
  std::vector<bool> seen(static_cast<std::size_t>(inst.n), false);
  for (int v : f) {
    if (v < 0 || v >= inst.n)
      throw ParamInvalid("assignment maps a job to a device index outside [0, n)");
    if (seen[static_cast<std::size_t>(v)])
      throw ParamInvalid("assignment maps two jobs to one device slot");
    seen[static_cast<std::size_t>(v)] = true;
  }
  Assignment a;
  a.processing_cost = processing_cost(inst, f);
  a.network_cost = network_cost(inst, f);
  a.device_of_job = std::move(f);
  return a;
}

Matrix effective_connectivity(const ResourceGraph& rg) {
  validate_resource_graph(rg);

  std::vector<int> ids;
  ids.reserve(rg.devices.size());
  for (const Device& d : rg.devices) ids.push_back(d.id);
  std::sort(ids.begin(), ids.end());
  std::map<int, int> index_of;
  for (size_t k = 0; k < ids.size(); ++k) index_of[ids[k]] = static_cast<int>(k);

  const int n = static_cast<int>(ids.size());
  Matrix dist(n, kInf);
  for (int i = 0; i < n; ++i) dist(i, i) = 0.0;
  for (const Link& l : rg.links) {
    int a = index_of[l.a], b = index_of[l.b];
    dist(a, b) = std::min(dist(a, b), l.cost);
    dist(b, a) = dist(a, b);
  }

  // Floyd-Warshall.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const double dik = dist(i, k);
      if (dik == kInf) continue;
      for (int j = 0; j < n; ++j) {
        const double via = dik + dist(k, j);
        if (via < dist(i, j)) dist(i, j) = via;
      }
    }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(i, j) == kInf) throw UnreachablePair(ids[i], ids[j]);
  return dist;
}

Instance normalize_instance(const ResourceGraph& rg, const JobGraph& jg) {
  validate_resource_graph(rg);
  validate_job_graph(jg);

  // Canonical orders: ascending id.
  std::vector<Device> devices = rg.devices;
  std::sort(devices.begin(), devices.end(),
            [](const Device& x, const Device& y) { return x.id < y.id; });
  std::vector<Job> jobs = jg.jobs;
  std::sort(jobs.begin(), jobs.end(),
            [](const Job& x, const Job& y) { return x.id < y.id; });

  const int n_dev = static_cast<int>(devices.size());
  const int n_job = static_cast<int>(jobs.size());

  // Closure over the full physical graph; dropped devices keep forwarding.
  Matrix closure = effective_connectivity(rg);  // indexed by ascending id

  // Which physical devices provide slots, and how many each.
  std::vector<int> copies(n_dev, 1);
  if (n_dev > n_job) {
    // Keep-priority: power desc, then summed incident link cost asc, then id
    // asc; the tail of this ranking is dropped.
    std::map<int, double> link_sum;
    for (const Device& d : devices) link_sum[d.id] = 0.0;
    for (const Link& l : rg.links) {
      link_sum[l.a] += l.cost;
      link_sum[l.b] += l.cost;
    }
    std::vector<int> order(n_dev);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      const Device& dx = devices[x];
      const Device& dy = devices[y];
      if (dx.power != dy.power) return dx.power > dy.power;
      if (link_sum.at(dx.id) != link_sum.at(dy.id))
        return link_sum.at(dx.id) < link_sum.at(dy.id);
      return dx.id < dy.id;
    });
    for (int k = n_job; k < n_dev; ++k) copies[order[k]] = 0;
  } else if (n_dev < n_job) {
    // Split: extra copies handed out round-robin in descending power order.
    std::vector<int> order(n_dev);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      if (devices[x].power != devices[y].power)
        return devices[x].power > devices[y].power;
      return devices[x].id < devices[y].id;
    });
    for (int t = 0; t < n_job - n_dev; ++t) ++copies[order[t % n_dev]];
  }

  Instance inst;
  inst.n = n_job;
  inst.job_size.reserve(n_job);
  inst.job_id.reserve(n_job);
  for (const Job& j : jobs) {
    inst.job_size.push_back(j.size);
    inst.job_id.push_back(j.id);
  }

  // Device slots in ascending id order, copies adjacent to their parent.
  std::vector<int> parent_of;  // slot -> physical index (ascending-id space)
  for (int k = 0; k < n_dev; ++k)
    for (int c = 0; c < copies[k]; ++c) {
      parent_of.push_back(k);
      inst.device_power.push_back(devices[k].power);
      inst.device_id.push_back(devices[k].id);
    }
  assert(static_cast<int>(parent_of.size()) == n_job);

  inst.d_conn = Matrix(n_job, 0.0);
  for (int u = 0; u < n_job; ++u)
    for (int v = 0; v < n_job; ++v)
      inst.d_conn(u, v) = parent_of[u] == parent_of[v]
                              ? 0.0
                              : closure(parent_of[u], parent_of[v]);

  std::map<int, int> job_index;
  for (int i = 0; i < n_job; ++i) job_index[inst.job_id[i]] = i;
  inst.j_conn = Matrix(n_job, 0.0);
  for (const Dep& d : jg.deps) {
    int a = job_index[d.a], b = job_index[d.b];
    inst.j_conn(a, b) = d.weight;
    inst.j_conn(b, a) = d.weight;
  }
  inst.dep_pairs = collect_dep_pairs(inst.j_conn);
  return inst;
}

Instance make_instance(std::vector<double> device_power,
                       std::vector<double> job_size,
                       Matrix d_conn,
                       Matrix j_conn) {
  const int n = static_cast<int>(device_power.size());
  if (static_cast<int>(job_size.size()) != n || d_conn.size() != n ||
      j_conn.size() != n)
    throw DimensionMismatch("instance parts disagree on n");
  if (n == 0) throw EmptyGraph("instance must have at least one job");
  for (double p : device_power)
    if (!(p > 0.0)) throw ParamInvalid("device power must be positive");
  for (double s : job_size)
    if (!(s > 0.0)) throw ParamInvalid("job size must be positive");
  check_square_symmetric(d_conn, "d_conn");
  check_square_symmetric(j_conn, "j_conn");

  Instance inst;
  inst.n = n;
  inst.device_power = std::move(device_power);
  inst.job_size = std::move(job_size);
  inst.d_conn = std::move(d_conn);
  inst.j_conn = std::move(j_conn);
  inst.device_id.resize(n);
  std::iota(inst.device_id.begin(), inst.device_id.end(), 0);
  inst.job_id.resize(n);
  std::iota(inst.job_id.begin(), inst.job_id.end(), 0);
  inst.dep_pairs = collect_dep_pairs(inst.j_conn);
  return inst;
}

}  // namespace edgefog
