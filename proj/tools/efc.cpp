// efc - edge/fog job placement toolkit.
//
//   efc gen    generate a random two-layer instance document
//   efc solve  assign jobs to devices with one of the solvers
//   efc bench  run a solver grid over generated instances -> CSV
//   efc sweep  sweep one generator density and aggregate network cost -> CSV
//
// All commands are deterministic for fixed flags and seeds.  Bench and sweep
// append finished rows as they are computed and skip rows already present in
// the output file, so interrupted runs can simply be re-run.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgefog/bench.hpp"
#include "edgefog/budget.hpp"
#include "edgefog/generator.hpp"
#include "edgefog/io.hpp"
#include "edgefog/lap.hpp"
#include "edgefog/lpcf.hpp"
#include "edgefog/model.hpp"
#include "edgefog/noc.hpp"

namespace {

using namespace edgefog;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

bool file_exists(const std::string& path) {
  if (path == "-") return false;
  return std::ifstream(path).good();
}

// --- flag parsing helpers ---------------------------------------------------

IntRange parse_range(const std::string& s, const std::string& flag) {
  const std::size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw ParamInvalid(flag + ": expected lo:hi, got '" + s + "'");
  try {
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ParamInvalid(flag + ": expected lo:hi integers, got '" + s + "'");
  }
}

// Exact decimal as integer numerator over a power-of-ten denominator, so
// start:stop:step grids avoid accumulated floating point drift.
struct Decimal {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Decimal parse_decimal(const std::string& s) {
  std::string digits;
  std::int64_t den = 1;
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (seen_dot) throw ParamInvalid("bad number '" + s + "'");
      seen_dot = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      digits += s[i];
      seen_digit = true;
      if (seen_dot) den *= 10;
    } else {
      throw ParamInvalid("bad number '" + s + "'");
    }
    if (den > 1000000000000LL) throw ParamInvalid("too many decimals in '" + s + "'");
  }
  if (!seen_digit) throw ParamInvalid("bad number '" + s + "'");
  Decimal d;
  d.num = std::stoll(digits.empty() ? "0" : digits);
  if (neg) d.num = -d.num;
  d.den = den;
  return d;
}

// "0.1,0.3,0.5" or "start:stop:step" (inclusive of stop when the grid lands
// on it exactly).
std::vector<double> parse_values(const std::string& s) {
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw ParamInvalid("--values: expected start:stop:step, got '" + s + "'");
    Decimal start = parse_decimal(parts[0]);
    Decimal stop = parse_decimal(parts[1]);
    Decimal step = parse_decimal(parts[2]);
    const std::int64_t den = std::max({start.den, stop.den, step.den});
    start.num *= den / start.den;
    stop.num *= den / stop.den;
    step.num *= den / step.den;
    if (step.num <= 0) throw ParamInvalid("--values: step must be positive");
    for (std::int64_t v = start.num; v <= stop.num; v += step.num)
      out.push_back(static_cast<double>(v) / static_cast<double>(den));
  } else {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
      out.push_back(static_cast<double>(parse_decimal(part).num) /
                    static_cast<double>(parse_decimal(part).den));
  }
  if (out.empty()) throw ParamInvalid("--values: no values given");
  return out;
}

// Generator knobs shared by gen, bench and sweep.
struct GenFlags {
  GenParams params;
  double edge_fraction = 0.6;
  std::string edge_power = "2:5", fog_power = "7:9", job_size = "2:6";
  std::string cost_ee = "1:4", cost_ff = "1:2", cost_ef = "4:8";

  void add_to(CLI::App& cmd, bool with_n) {
    if (with_n) cmd.add_option("--n", params.n_total, "devices and jobs per instance");
    cmd.add_option("--seed", params.seed, "base RNG seed");
    cmd.add_option("--edge-fraction", edge_fraction,
                   "fraction of devices on the edge layer (fog gets the rest)");
    cmd.add_option("--edge-density", params.edge_density, "edge-edge link probability");
    cmd.add_option("--fog-density", params.fog_density, "fog-fog link probability");
    cmd.add_option("--inter-density", params.inter_density, "edge-fog link probability");
    cmd.add_option("--dep-density", params.dep_density, "job dependence probability");
    cmd.add_option("--edge-power", edge_power, "edge device power range lo:hi");
    cmd.add_option("--fog-power", fog_power, "fog device power range lo:hi");
    cmd.add_option("--job-size", job_size, "job size range lo:hi");
    cmd.add_option("--cost-ee", cost_ee, "edge-edge link cost range lo:hi");
    cmd.add_option("--cost-ff", cost_ff, "fog-fog link cost range lo:hi");
    cmd.add_option("--cost-ef", cost_ef, "edge-fog link cost range lo:hi");
  }

  GenParams resolve() const {
    GenParams p = params;
    p.edge_fraction = edge_fraction;
    p.fog_fraction = 1.0 - edge_fraction;
    p.edge_power = parse_range(edge_power, "--edge-power");
    p.fog_power = parse_range(fog_power, "--fog-power");
    p.job_size = parse_range(job_size, "--job-size");
    p.cost_edge_edge = parse_range(cost_ee, "--cost-ee");
    p.cost_fog_fog = parse_range(cost_ff, "--cost-ff");
    p.cost_edge_fog = parse_range(cost_ef, "--cost-ef");
    return p;
  }
};

struct BudgetFlags {
  std::int64_t time_limit_ms = 0;
  std::uint64_t node_limit = 0;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--time-limit-ms", time_limit_ms,
                   "stop anytime solvers after this many milliseconds (0 = none)");
    cmd.add_option("--node-limit", node_limit,
                   "stop anytime solvers after this many search nodes (0 = none)");
  }

  SolverBudget resolve() const {
    SolverBudget b;
    if (time_limit_ms < 0) throw ParamInvalid("--time-limit-ms must be >= 0");
    if (time_limit_ms > 0) b.time_limit = std::chrono::milliseconds(time_limit_ms);
    if (node_limit > 0) b.node_limit = node_limit;
    return b;
  }
};

// --- subcommands -------------------------------------------------------------

int cmd_gen(const GenFlags& gf, const std::string& out_path) {
  const GenParams params = gf.resolve();
  const Generated g = generate(params);
  normalize_instance(g.rg, g.jg);  // reject anything a solver could not load
  write_output(out_path, emit_instance(g.rg, g.jg, InstanceMeta{params, g.connectivity_repaired}));
  return 0;
}

int cmd_solve(const std::string& in_path, const std::string& solver, const BudgetFlags& bf,
              const std::string& format, const std::string& out_path) {
  const ParsedInstance doc = parse_instance(read_input(in_path));
  const Instance inst = normalize_instance(doc.rg, doc.jg);
  const SolverBudget budget = bf.resolve();

  Assignment asg;
  SolveSummary summary;
  summary.solver = solver;
  double wall_ms = 0.0;
  ResultRow row;
  row.n = inst.n;
  row.solver = solver;
  row.seed = doc.meta ? doc.meta->params.seed : 0;

  if (solver == "lap") {
    const auto t0 = std::chrono::steady_clock::now();
    const LapResult r = solve_lap(build_processing_matrix(inst));
    const auto t1 = std::chrono::steady_clock::now();
    asg = make_assignment(inst, r.col_of_row);
    summary.proven_optimal = true;
    summary.lap_value = r.value;
    wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.complete = true;
  } else if (solver == "lpcf") {
    const LpcfReport r = solve_lpcf(inst, budget);
    asg = r.best;
    summary.space_exhausted = r.space_exhausted;
    summary.lap_value = r.lap_value;
    summary.reduced_space_size = r.reduced_space_size;
    summary.nodes_explored = r.nodes_explored;
    wall_ms = r.wall_time.count();
    row.complete = r.space_exhausted;
    row.reduced_space_size = r.reduced_space_size;
  } else if (solver == "noc-perm" || solver == "noc-bnb") {
    const NocReport r =
        solver == "noc-perm" ? solve_noc_exhaustive(inst, budget) : solve_noc_bnb(inst, budget);
    asg = r.best;
    summary.proven_optimal = r.proven_optimal;
    summary.nodes_explored = r.nodes_explored;
    wall_ms = r.wall_time.count();
    row.complete = r.proven_optimal;
  } else {
    throw ParamInvalid("unknown solver '" + solver + "'");
  }

  if (format == "json") {
    write_output(out_path, emit_assignment(inst, asg, summary));
  } else if (format == "csv") {
    row.wall_time_ms = wall_ms;
    row.processing_cost = asg.processing_cost;
    row.network_cost = asg.network_cost;
    write_output(out_path, result_csv_header() + "\n" + to_csv(row) + "\n");
  } else {
    throw ParamInvalid("unknown format '" + format + "'");
  }
  return 0;
}

std::vector<int> parse_sizes(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw ParamInvalid("--sizes: expected integers, got '" + part + "'");
    }
  }
  if (out.empty()) throw ParamInvalid("--sizes: no sizes given");
  return out;
}

std::vector<std::string> parse_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) out.push_back(part);
  return out;
}

// Shared by bench and sweep: resumable CSV production.  Existing rows are
// parsed and skipped, new rows are appended (and flushed) as they finish so
// an interrupted run leaves a valid CSV prefix, and on completion the file
// is rewritten fully sorted.
template <typename Row, typename ParseFn, typename RunFn>
int run_csv_command(const std::string& out_path, const std::string& header, ParseFn parse,
                    RunFn run) {
  std::vector<Row> existing;
  if (file_exists(out_path)) existing = parse(read_input(out_path));

  std::optional<std::ofstream> append;
  if (out_path != "-") {
    const bool fresh = existing.empty();
    append.emplace(out_path, fresh ? (std::ios::binary | std::ios::trunc)
                                   : (std::ios::binary | std::ios::app));
    if (!*append) throw Error("cannot open '" + out_path + "' for writing");
    if (fresh) *append << header << "\n" << std::flush;
  }
  const auto on_row = [&](const Row& row) {
    if (append) *append << to_csv(row) << "\n" << std::flush;
  };

  const std::vector<Row> rows = run(std::move(existing), on_row);

  std::string text = header + "\n";
  for (const Row& row : rows) text += to_csv(row) + "\n";
  if (append) append->close();
  write_output(out_path, text);
  return 0;
}

template <typename Row>
std::string rows_to_json(const std::vector<Row>& rows);

template <>
std::string rows_to_json(const std::vector<ResultRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ResultRow& r : rows) {
    nlohmann::ordered_json o;
    o["n"] = r.n;
    o["solver"] = r.solver;
    o["seed"] = r.seed;
    o["wall_time_ms"] = r.wall_time_ms;
    o["processing_cost"] = r.processing_cost;
    o["network_cost"] = r.network_cost;
    o["complete"] = r.complete;
    if (r.reduced_space_size) o["reduced_space_size"] = *r.reduced_space_size;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

template <>
std::string rows_to_json(const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SweepRow& r : rows) {
    nlohmann::ordered_json o;
    o["axis"] = r.axis;
    o["value"] = r.value;
    o["n"] = r.n;
    o["seeds"] = r.seeds;
    o["mean_network_cost"] = r.mean_network_cost;
    o["stddev_network_cost"] = r.stddev_network_cost;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge/fog job placement toolkit"};
  app.require_subcommand(1);

  // gen
  GenFlags gen_flags;
  std::string gen_out = "-";
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance document");
  gen_flags.add_to(*gen_cmd, /*with_n=*/true);
  gen_cmd->add_option("-o,--output", gen_out, "output path ('-' = stdout)");

  // solve
  std::string solve_in = "-", solve_out = "-", solve_solver, solve_format = "json";
  BudgetFlags solve_budget;
  CLI::App* solve_cmd = app.add_subcommand("solve", "assign jobs to devices");
  solve_cmd->add_option("-i,--input", solve_in, "instance document ('-' = stdin)");
  solve_cmd->add_option("--solver", solve_solver, "lap | lpcf | noc-perm | noc-bnb")->required();
  solve_budget.add_to(*solve_cmd);
  solve_cmd->add_option("--format", solve_format, "json | csv");
  solve_cmd->add_option("-o,--output", solve_out, "output path ('-' = stdout)");

  // bench
  GenFlags bench_flags;
  BudgetFlags bench_budget;
  std::string bench_sizes, bench_solvers, bench_out = "-", bench_format = "csv";
  int bench_seeds = 1;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run a solver grid, emit rows");
  bench_cmd->add_option("--sizes", bench_sizes, "comma list of instance sizes")->required();
  bench_cmd->add_option("--solvers", bench_solvers, "comma list of lap,lpcf,noc-perm,noc-bnb")
      ->required();
  bench_cmd->add_option("--seeds", bench_seeds, "replicates per size");
  bench_flags.add_to(*bench_cmd, /*with_n=*/false);
  bench_budget.add_to(*bench_cmd);
  bench_cmd->add_option("--format", bench_format, "csv | json (csv supports resume)");
  bench_cmd->add_option("-o,--output", bench_out, "output path ('-' = stdout)");

  // sweep
  GenFlags sweep_flags;
  BudgetFlags sweep_budget;
  std::string sweep_axis, sweep_values, sweep_out = "-", sweep_format = "csv";
  int sweep_seeds = 1;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep one density, aggregate network cost");
  sweep_cmd
      ->add_option("--axis", sweep_axis, "edge-density | fog-density | inter-density | dep-density")
      ->required();
  sweep_cmd->add_option("--values", sweep_values, "comma list or start:stop:step")->required();
  sweep_cmd->add_option("--seeds", sweep_seeds, "replicates per point");
  sweep_flags.add_to(*sweep_cmd, /*with_n=*/true);
  sweep_budget.add_to(*sweep_cmd);
  sweep_cmd->add_option("--format", sweep_format, "csv | json (csv supports resume)");
  sweep_cmd->add_option("-o,--output", sweep_out, "output path ('-' = stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen_flags, gen_out);

    if (solve_cmd->parsed())
      return cmd_solve(solve_in, solve_solver, solve_budget, solve_format, solve_out);

    if (bench_cmd->parsed()) {
      ExperimentSpec spec;
      spec.sizes = parse_sizes(bench_sizes);
      spec.solvers = parse_list(bench_solvers);
      spec.seeds = bench_seeds;
      spec.params = bench_flags.resolve();
      spec.budget = bench_budget.resolve();
      if (bench_format == "json") {
        write_output(bench_out, rows_to_json(run_bench(spec)));
        return 0;
      }
      if (bench_format != "csv") throw ParamInvalid("unknown format '" + bench_format + "'");
      return run_csv_command<ResultRow>(
          bench_out, result_csv_header(), parse_result_csv,
          [&](std::vector<ResultRow> existing, const auto& on_row) {
            return run_bench(spec, std::move(existing), on_row);
          });
    }

    if (sweep_cmd->parsed()) {
      SweepSpec spec;
      spec.base = sweep_flags.resolve();
      spec.axis = sweep_axis;
      spec.values = parse_values(sweep_values);
      spec.seeds = sweep_seeds;
      spec.budget = sweep_budget.resolve();
      if (sweep_format == "json") {
        write_output(sweep_out, rows_to_json(run_sweep(spec)));
        return 0;
      }
      if (sweep_format != "csv") throw ParamInvalid("unknown format '" + sweep_format + "'");
      return run_csv_command<SweepRow>(
          sweep_out, sweep_csv_header(), parse_sweep_csv,
          [&](std::vector<SweepRow> existing, const auto& on_row) {
            return run_sweep(spec, std::move(existing), on_row);
          });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
