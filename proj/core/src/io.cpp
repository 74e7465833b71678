#include "edgefog/io.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace edgefog {

namespace {

using json = nlohmann::ordered_json;

// --- field access with path context ---------------------------------------

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const json& get_field(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

double get_number(const json& obj, const std::string& path, const char* key) {
  const json& v = get_field(obj, path, key);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

int get_int(const json& obj, const std::string& path, const char* key) {
  const json& v = get_field(obj, path, key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

std::uint64_t get_u64(const json& obj, const std::string& path, const char* key) {
  const json& v = get_field(obj, path, key);
  if (!v.is_number_unsigned() && !v.is_number_integer())
    fail(path + "." + key, "expected a non-negative integer");
  if (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)
    fail(path + "." + key, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::string get_string(const json& obj, const std::string& path, const char* key) {
  const json& v = get_field(obj, path, key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

bool get_bool(const json& obj, const std::string& path, const char* key) {
  const json& v = get_field(obj, path, key);
  if (!v.is_boolean()) fail(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

const json& get_array(const json& obj, const std::string& path, const char* key) {
  const json& v = get_field(obj, path, key);
  if (!v.is_array()) fail(path + "." + key, "expected an array");
  return v;
}

json parse_root(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// --- generator params <-> json ---------------------------------------------

json range_to_json(const IntRange& r) { return json::array({r.lo, r.hi}); }

IntRange range_from_json(const json& obj, const std::string& path, const char* key) {
  const json& v = get_array(obj, path, key);
  if (v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    fail(path + "." + key, "expected [lo, hi] integers");
  return {v[0].get<int>(), v[1].get<int>()};
}

json params_to_json(const GenParams& p) {
  json o;
  o["n_total"] = p.n_total;
  o["edge_fraction"] = p.edge_fraction;
  o["fog_fraction"] = p.fog_fraction;
  o["edge_density"] = p.edge_density;
  o["fog_density"] = p.fog_density;
  o["inter_density"] = p.inter_density;
  o["dep_density"] = p.dep_density;
  o["edge_power"] = range_to_json(p.edge_power);
  o["fog_power"] = range_to_json(p.fog_power);
  o["job_size"] = range_to_json(p.job_size);
  o["cost_edge_edge"] = range_to_json(p.cost_edge_edge);
  o["cost_fog_fog"] = range_to_json(p.cost_fog_fog);
  o["cost_edge_fog"] = range_to_json(p.cost_edge_fog);
  o["seed"] = p.seed;
  return o;
}

GenParams params_from_json(const json& o, const std::string& path) {
  GenParams p;
  p.n_total = get_int(o, path, "n_total");
  p.edge_fraction = get_number(o, path, "edge_fraction");
  p.fog_fraction = get_number(o, path, "fog_fraction");
  p.edge_density = get_number(o, path, "edge_density");
  p.fog_density = get_number(o, path, "fog_density");
  p.inter_density = get_number(o, path, "inter_density");
  p.dep_density = get_number(o, path, "dep_density");
  p.edge_power = range_from_json(o, path, "edge_power");
  p.fog_power = range_from_json(o, path, "fog_power");
  p.job_size = range_from_json(o, path, "job_size");
  p.cost_edge_edge = range_from_json(o, path, "cost_edge_edge");
  p.cost_fog_fog = range_from_json(o, path, "cost_fog_fog");
  p.cost_edge_fog = range_from_json(o, path, "cost_edge_fog");
  p.seed = get_u64(o, path, "seed");
  return p;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

// --- instance documents ------------------------------------------------------

std::string emit_instance(const ResourceGraph& rg, const JobGraph& jg,
                          const std::optional<InstanceMeta>& meta) {
  json doc;

  std::vector<Device> devices = rg.devices;
  std::sort(devices.begin(), devices.end(),
            [](const Device& x, const Device& y) { return x.id < y.id; });
  doc["devices"] = json::array();
  for (const Device& d : devices) {
    json o;
    o["id"] = d.id;
    o["layer"] = layer_name(d.layer);
    o["power"] = d.power;
    doc["devices"].push_back(std::move(o));
  }

  std::vector<Link> links = rg.links;
  for (Link& l : links)
    if (l.a > l.b) std::swap(l.a, l.b);
  std::sort(links.begin(), links.end(), [](const Link& x, const Link& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  doc["links"] = json::array();
  for (const Link& l : links) {
    json o;
    o["a"] = l.a;
    o["b"] = l.b;
    o["cost"] = l.cost;
    doc["links"].push_back(std::move(o));
  }

  std::vector<Job> jobs = jg.jobs;
  std::sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) { return x.id < y.id; });
  doc["jobs"] = json::array();
  for (const Job& j : jobs) {
    json o;
    o["id"] = j.id;
    o["size"] = j.size;
    doc["jobs"].push_back(std::move(o));
  }

  std::vector<Dep> deps = jg.deps;
  for (Dep& d : deps)
    if (d.a > d.b) std::swap(d.a, d.b);
  std::sort(deps.begin(), deps.end(), [](const Dep& x, const Dep& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  doc["deps"] = json::array();
  for (const Dep& d : deps) {
    json o;
    o["a"] = d.a;
    o["b"] = d.b;
    o["weight"] = d.weight;
    doc["deps"].push_back(std::move(o));
  }

  if (meta) {
    json m;
    m["generator"] = params_to_json(meta->params);
    m["connectivity_repaired"] = meta->connectivity_repaired;
    doc["meta"] = std::move(m);
  }

  return dump(doc);
}

ParsedInstance parse_instance(const std::string& text) {
  const json doc = parse_root(text);
  if (!doc.is_object()) throw ParseError("$: expected a top-level object");

  ParsedInstance out;

  const json& devices = get_array(doc, "$", "devices");
  for (std::size_t i = 0; i < devices.size(); ++i) {
    const std::string path = "$.devices[" + std::to_string(i) + "]";
    const json& o = devices[i];
    Device d;
    d.id = get_int(o, path, "id");
    const std::string layer = get_string(o, path, "layer");
    try {
      d.layer = layer_from_name(layer);
    } catch (const ParseError&) {
      fail(path + ".layer", "unknown layer '" + layer + "'");
    }
    d.power = get_number(o, path, "power");
    out.rg.devices.push_back(d);
  }

  if (doc.contains("links")) {
    const json& links = get_array(doc, "$", "links");
    for (std::size_t i = 0; i < links.size(); ++i) {
      const std::string path = "$.links[" + std::to_string(i) + "]";
      const json& o = links[i];
      out.rg.links.push_back(
          {get_int(o, path, "a"), get_int(o, path, "b"), get_number(o, path, "cost")});
    }
  }

  const json& jobs = get_array(doc, "$", "jobs");
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const std::string path = "$.jobs[" + std::to_string(i) + "]";
    const json& o = jobs[i];
    out.jg.jobs.push_back({get_int(o, path, "id"), get_number(o, path, "size")});
  }

  if (doc.contains("deps")) {
    const json& deps = get_array(doc, "$", "deps");
    for (std::size_t i = 0; i < deps.size(); ++i) {
      const std::string path = "$.deps[" + std::to_string(i) + "]";
      const json& o = deps[i];
      Dep d;
      d.a = get_int(o, path, "a");
      d.b = get_int(o, path, "b");
      d.weight = o.contains("weight") ? get_number(o, path, "weight") : 1.0;
      out.jg.deps.push_back(d);
    }
  }

  if (doc.contains("meta")) {
    const json& m = doc["meta"];
    if (!m.is_object()) fail("$.meta", "expected an object");
    if (m.contains("generator")) {
      InstanceMeta meta;
      meta.params = params_from_json(m["generator"], "$.meta.generator");
      meta.connectivity_repaired =
          m.contains("connectivity_repaired") ? get_bool(m, "$.meta", "connectivity_repaired")
                                              : false;
      out.meta = meta;
    }
  }

  return out;
}

// --- assignment documents ----------------------------------------------------

std::string emit_assignment(const Instance& inst, const Assignment& asg,
                            const SolveSummary& summary) {
  if (asg.device_of_job.size() != static_cast<std::size_t>(inst.n))
    throw DimensionMismatch("assignment covers " + std::to_string(asg.device_of_job.size()) +
                            " jobs, instance has " + std::to_string(inst.n));
  json doc;
  if (!summary.solver.empty()) doc["solver"] = summary.solver;
  doc["mapping"] = json::array();
  for (int i = 0; i < inst.n; ++i) {
    json o;
    o["job"] = inst.job_id[static_cast<std::size_t>(i)];
    o["device"] = inst.device_id[static_cast<std::size_t>(asg.device_of_job[static_cast<std::size_t>(i)])];
    doc["mapping"].push_back(std::move(o));
  }
  doc["processing_cost"] = asg.processing_cost;
  doc["network_cost"] = asg.network_cost;
  if (summary.proven_optimal) doc["proven_optimal"] = *summary.proven_optimal;
  if (summary.space_exhausted) doc["space_exhausted"] = *summary.space_exhausted;
  if (summary.lap_value) doc["lap_value"] = *summary.lap_value;
  if (summary.reduced_space_size) doc["reduced_space_size"] = *summary.reduced_space_size;
  if (summary.nodes_explored) doc["nodes_explored"] = *summary.nodes_explored;
  return dump(doc);
}

ParsedAssignment parse_assignment(const std::string& text) {
  const json doc = parse_root(text);
  if (!doc.is_object()) throw ParseError("$: expected a top-level object");
  ParsedAssignment out;
  const json& mapping = get_array(doc, "$", "mapping");
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    const std::string path = "$.mapping[" + std::to_string(i) + "]";
    const json& o = mapping[i];
    out.mapping.emplace_back(get_int(o, path, "job"), get_int(o, path, "device"));
  }
  out.processing_cost = get_number(doc, "$", "processing_cost");
  out.network_cost = get_number(doc, "$", "network_cost");
  return out;
}

std::pair<double, double> costs_from_mapping(
    const Instance& inst, const std::vector<std::pair<int, int>>& mapping) {
  if (mapping.size() != static_cast<std::size_t>(inst.n))
    throw ParseError("mapping covers " + std::to_string(mapping.size()) + " jobs, instance has " +
                     std::to_string(inst.n));

  std::map<int, std::vector<int>> job_slots;     // job id -> instance rows
  std::map<int, std::vector<int>> device_slots;  // device id -> instance columns
  for (int i = inst.n - 1; i >= 0; --i) {
    job_slots[inst.job_id[static_cast<std::size_t>(i)]].push_back(i);
    device_slots[inst.device_id[static_cast<std::size_t>(i)]].push_back(i);
  }

  std::vector<int> f(static_cast<std::size_t>(inst.n), -1);
  for (std::size_t k = 0; k < mapping.size(); ++k) {
    const std::string path = "$.mapping[" + std::to_string(k) + "]";
    auto js = job_slots.find(mapping[k].first);
    if (js == job_slots.end() || js->second.empty())
      throw ParseError(path + ".job: id " + std::to_string(mapping[k].first) +
                       " unknown or already assigned");
    auto ds = device_slots.find(mapping[k].second);
    if (ds == device_slots.end() || ds->second.empty())
      throw ParseError(path + ".device: id " + std::to_string(mapping[k].second) +
                       " unknown or exhausted");
    f[static_cast<std::size_t>(js->second.back())] = ds->second.back();
    js->second.pop_back();
    ds->second.pop_back();
  }

  return {processing_cost(inst, f), network_cost(inst, f)};
}

}  // namespace edgefog
