#include "edgefog/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstring>
#include <set>
#include <sstream>
#include <tuple>

#include "edgefog/lap.hpp"
#include "edgefog/lpcf.hpp"
#include "edgefog/noc.hpp"
#include "edgefog/rng.hpp"

namespace edgefog {

namespace {

template <typename Duration>
double ms(Duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& s, const char* what) {
  const char* end = s.data() + s.size();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(std::string(what) + ": expected a number, got '" + s + "'");
  return v;
}

template <typename T>
T parse_integer(const std::string& s, const char* what) {
  const char* end = s.data() + s.size();
  T v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(std::string(what) + ": expected an integer, got '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s, const char* what) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError(std::string(what) + ": expected true/false, got '" + s + "'");
}

std::vector<std::string> csv_lines(const std::string& text, const std::string& header) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty() || lines.front() != header)
    throw ParseError("bad or missing CSV header, expected '" + header + "'");
  lines.erase(lines.begin());
  return lines;
}

Instance build_instance(const GenParams& params) {
  const Generated g = generate(params);
  return normalize_instance(g.rg, g.jg);
}

ResultRow solve_cell(const Instance& inst, const std::string& solver,
                     const SolverBudget& budget) {
  ResultRow row;
  if (solver == "lap") {
    const auto t0 = std::chrono::steady_clock::now();
    const LapResult r = solve_lap(build_processing_matrix(inst));
    row.wall_time_ms = ms(std::chrono::steady_clock::now() - t0);
    const Assignment a = make_assignment(inst, r.col_of_row);
    row.processing_cost = a.processing_cost;
    row.network_cost = a.network_cost;
    row.complete = true;
  } else if (solver == "lpcf") {
    const LpcfReport r = solve_lpcf(inst, budget);
    row.wall_time_ms = ms(r.wall_time);
    row.processing_cost = r.best.processing_cost;
    row.network_cost = r.best.network_cost;
    row.complete = r.space_exhausted;
    row.reduced_space_size = r.reduced_space_size;
  } else if (solver == "noc-perm" || solver == "noc-bnb") {
    const NocReport r =
        solver == "noc-perm" ? solve_noc_exhaustive(inst, budget) : solve_noc_bnb(inst, budget);
    row.wall_time_ms = ms(r.wall_time);
    row.processing_cost = r.best.processing_cost;
    row.network_cost = r.best.network_cost;
    row.complete = r.proven_optimal;
  } else {
    throw ParamInvalid("unknown solver '" + solver + "'");
  }
  return row;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

const std::string& result_csv_header() {
  static const std::string h =
      "n,solver,seed,wall_time_ms,processing_cost,network_cost,complete,reduced_space_size";
  return h;
}

std::string to_csv(const ResultRow& r) {
  std::string out;
  out += std::to_string(r.n);
  out += ',';
  out += r.solver;
  out += ',';
  out += std::to_string(r.seed);
  out += ',';
  out += format_double(r.wall_time_ms);
  out += ',';
  out += format_double(r.processing_cost);
  out += ',';
  out += format_double(r.network_cost);
  out += ',';
  out += r.complete ? "true" : "false";
  out += ',';
  if (r.reduced_space_size) out += std::to_string(*r.reduced_space_size);
  return out;
}

std::vector<ResultRow> parse_result_csv(const std::string& text) {
  std::vector<ResultRow> rows;
  for (const std::string& line : csv_lines(text, result_csv_header())) {
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 8) throw ParseError("expected 8 fields, got '" + line + "'");
    ResultRow r;
    r.n = parse_integer<int>(f[0], "n");
    r.solver = f[1];
    r.seed = parse_integer<std::uint64_t>(f[2], "seed");
    r.wall_time_ms = parse_double(f[3], "wall_time_ms");
    r.processing_cost = parse_double(f[4], "processing_cost");
    r.network_cost = parse_double(f[5], "network_cost");
    r.complete = parse_bool(f[6], "complete");
    if (!f[7].empty()) r.reduced_space_size = parse_integer<std::uint64_t>(f[7], "reduced_space_size");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ResultRow> run_bench(const ExperimentSpec& spec, std::vector<ResultRow> existing,
                                 const std::function<void(const ResultRow&)>& on_row) {
  if (spec.sizes.empty()) throw ParamInvalid("bench needs at least one size");
  if (spec.solvers.empty()) throw ParamInvalid("bench needs at least one solver");
  if (spec.seeds < 1) throw ParamInvalid("bench needs seeds >= 1");
  for (const std::string& s : spec.solvers)
    if (std::find(std::begin(kBenchSolvers), std::end(kBenchSolvers), s) ==
        std::end(kBenchSolvers))
      throw ParamInvalid("unknown solver '" + s + "'");

  std::vector<int> sizes = spec.sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::vector<std::string> solvers = spec.solvers;
  std::sort(solvers.begin(), solvers.end());
  solvers.erase(std::unique(solvers.begin(), solvers.end()), solvers.end());

  std::set<std::tuple<int, std::string, std::uint64_t>> done;
  for (const ResultRow& r : existing) done.insert({r.n, r.solver, r.seed});

  std::vector<ResultRow> rows = std::move(existing);
  for (const int n : sizes) {
    if (n < 1) throw ParamInvalid("bench sizes must be >= 1");
    for (int s = 0; s < spec.seeds; ++s) {
      const std::uint64_t seed = spec.params.seed + static_cast<std::uint64_t>(s);
      // The instance is shared by every solver at this cell; build it lazily
      // so fully resumed cells cost nothing.
      std::optional<Instance> inst;
      for (const std::string& solver : solvers) {
        if (done.count({n, solver, seed})) continue;
        if (!inst) {
          GenParams params = spec.params;
          params.n_total = n;
          params.seed = seed;
          inst = build_instance(params);
        }
        ResultRow row = solve_cell(*inst, solver, spec.budget);
        row.n = n;
        row.solver = solver;
        row.seed = seed;
        if (on_row) on_row(row);
        rows.push_back(std::move(row));
      }
    }
  }

  std::sort(rows.begin(), rows.end(), [](const ResultRow& x, const ResultRow& y) {
    return std::tie(x.n, x.solver, x.seed) < std::tie(y.n, y.solver, y.seed);
  });
  return rows;
}

const std::string& sweep_csv_header() {
  static const std::string h = "axis,value,n,seeds,mean_network_cost,stddev_network_cost";
  return h;
}

std::string to_csv(const SweepRow& r) {
  std::string out;
  out += r.axis;
  out += ',';
  out += format_double(r.value);
  out += ',';
  out += std::to_string(r.n);
  out += ',';
  out += std::to_string(r.seeds);
  out += ',';
  out += format_double(r.mean_network_cost);
  out += ',';
  out += format_double(r.stddev_network_cost);
  return out;
}

std::vector<SweepRow> parse_sweep_csv(const std::string& text) {
  std::vector<SweepRow> rows;
  for (const std::string& line : csv_lines(text, sweep_csv_header())) {
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 6) throw ParseError("expected 6 fields, got '" + line + "'");
    SweepRow r;
    r.axis = f[0];
    r.value = parse_double(f[1], "value");
    r.n = parse_integer<int>(f[2], "n");
    r.seeds = parse_integer<int>(f[3], "seeds");
    r.mean_network_cost = parse_double(f[4], "mean_network_cost");
    r.stddev_network_cost = parse_double(f[5], "stddev_network_cost");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::vector<SweepRow> existing,
                                const std::function<void(const SweepRow&)>& on_row) {
  if (spec.seeds < 1) throw ParamInvalid("sweep needs seeds >= 1");
  const std::vector<GenParams> points = sweep_params(spec.base, spec.axis, spec.values);

  // Keys compare the serialized value so resumed files match exactly.
  std::set<std::tuple<std::string, std::string, int, int>> done;
  for (const SweepRow& r : existing)
    done.insert({r.axis, format_double(r.value), r.n, r.seeds});

  std::vector<SweepRow> rows = std::move(existing);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double value = spec.values[i];
    if (done.count({spec.axis, format_double(value), spec.base.n_total, spec.seeds})) continue;

    std::vector<double> costs;
    costs.reserve(static_cast<std::size_t>(spec.seeds));
    for (int j = 0; j < spec.seeds; ++j) {
      GenParams params = points[i];
      params.seed = derive_seed(points[i].seed, static_cast<std::uint64_t>(j));
      const Instance inst = build_instance(params);
      costs.push_back(solve_lpcf(inst, spec.budget).best.network_cost);
    }

    SweepRow row;
    row.axis = spec.axis;
    row.value = value;
    row.n = spec.base.n_total;
    row.seeds = spec.seeds;
    double sum = 0.0;
    for (const double c : costs) sum += c;
    row.mean_network_cost = sum / static_cast<double>(costs.size());
    if (costs.size() > 1) {
      double ss = 0.0;
      for (const double c : costs) {
        const double d = c - row.mean_network_cost;
        ss += d * d;
      }
      row.stddev_network_cost = std::sqrt(ss / static_cast<double>(costs.size() - 1));
    }
    if (on_row) on_row(row);
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
    return std::tie(x.axis, x.value, x.n) < std::tie(y.axis, y.value, y.n);
  });
  return rows;
}

}  // namespace edgefog
