#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Ten release gates, one test case each.  Every case prints a single
// [PASS]/[FAIL] line with the numbers it measured, then asserts.  Run the
// binary with no arguments to see all ten lines at once; the ctest entries
// acceptance_01 .. acceptance_10 run them one at a time.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "edgefog/bench.hpp"
#include "edgefog/generator.hpp"
#include "edgefog/lap.hpp"
#include "edgefog/lpcf.hpp"
#include "edgefog/model.hpp"
#include "edgefog/noc.hpp"
#include "oracles.hpp"

using namespace edgefog;
namespace fs = std::filesystem;

namespace {

void report(bool pass, const char* fmt, ...) {
  std::printf("[%s] ", pass ? "PASS" : "FAIL");
  va_list args;
  va_start(args, fmt);
  std::vprintf(fmt, args);
  va_end(args);
  std::printf("\n");
  std::fflush(stdout);
}

double pct(double x) { return 100.0 * x; }

}  // namespace

TEST_CASE("criterion 01: lap value matches the exhaustive minimum") {
  int checked = 0, agreed = 0;
  double worst = 0.0;
  for (int n = 4; n <= 8; ++n) {
    for (std::uint64_t s = 1; s <= 200; ++s) {
      const Instance inst = oracle::gen_norm(n, s);
      const double lap = solve_lap(build_processing_matrix(inst)).value;
      double brute = 1e300;
      oracle::for_each_permutation(n, [&](const std::vector<int>& p) {
        brute = std::min(brute, oracle::processing_sum(inst, p));
      });
      ++checked;
      const double diff = std::abs(lap - brute);
      worst = std::max(worst, diff);
      if (diff <= 1e-9) ++agreed;
    }
  }
  const bool pass = agreed == checked;
  report(pass, "criterion 01: lap value equals the n! minimum on %d/%d instances (worst |diff| %.3g)",
         agreed, checked, worst);
  CHECK(pass);
}

TEST_CASE("criterion 02: lpcf processing cost equals the lap value exactly") {
  const std::vector<int> sizes = {4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 20, 30};
  SolverBudget budget;
  budget.node_limit = 100000;
  int checked = 0, agreed = 0;
  for (int n : sizes) {
    for (std::uint64_t s = 1; s <= 20; ++s) {
      const Instance inst = oracle::gen_norm(n, 1000 * static_cast<std::uint64_t>(n) + s);
      const LpcfReport rep = solve_lpcf(inst, budget);
      ++checked;
      if (rep.best.processing_cost == rep.lap_value) ++agreed;
    }
  }
  const bool pass = agreed == checked;
  report(pass, "criterion 02: processing cost is bit-identical to the lap value on %d/%d runs "
               "(sizes 4..30, budgeted and exhaustive)",
         agreed, checked);
  CHECK(pass);
}

TEST_CASE("criterion 03: lpcf network cost is the orbit minimum") {
  int checked = 0, agreed = 0;
  for (int n = 4; n <= 7; ++n) {
    for (std::uint64_t s = 1; s <= 100; ++s) {
      const Instance inst = oracle::gen_norm(n, s * 3 + 7);
      const LpcfReport rep = solve_lpcf(inst);
      const std::vector<int> base = solve_lap(build_processing_matrix(inst)).col_of_row;
      double orbit_min = 1e300;
      enumerate_orbit(equivalence_classes(inst), base, [&](const std::vector<int>& f) {
        orbit_min = std::min(orbit_min, network_cost(inst, f));
        return true;
      });
      ++checked;
      if (rep.best.network_cost == orbit_min && rep.space_exhausted) ++agreed;
    }
  }
  const bool pass = agreed == checked;
  report(pass, "criterion 03: network cost equals the deduplicated-orbit minimum on %d/%d instances",
         agreed, checked);
  CHECK(pass);
}

TEST_CASE("criterion 04: both network-only searches return the same optimum") {
  int checked = 0, agreed = 0;
  for (int n = 4; n <= 8; ++n) {
    for (std::uint64_t s = 1; s <= 100; ++s) {
      const Instance inst = oracle::gen_norm(n, s * 5 + 11);
      const NocReport ex = solve_noc_exhaustive(inst);
      const NocReport bb = solve_noc_bnb(inst);
      ++checked;
      if (ex.best.network_cost == bb.best.network_cost && ex.proven_optimal && bb.proven_optimal)
        ++agreed;
    }
  }
  const bool pass = agreed == checked;
  report(pass, "criterion 04: exhaustive and branch-and-bound agree on %d/%d instances", agreed,
         checked);
  CHECK(pass);
}

TEST_CASE("criterion 05: the optimum sandwiches lpcf and the mean gap stays small") {
  int checked = 0, sandwich_ok = 0, within10 = 0;
  double gap_sum = 0.0, lpcf_sum = 0.0, noc_sum = 0.0;
  for (int n = 5; n <= 8; ++n) {
    for (std::uint64_t s = 1; s <= 25; ++s) {
      const Instance inst = oracle::gen_norm(n, s * 7 + 3);
      const double lpcf = solve_lpcf(inst).best.network_cost;
      const double noc = solve_noc_bnb(inst).best.network_cost;
      ++checked;
      if (noc <= lpcf) ++sandwich_ok;
      const double gap = noc > 0.0 ? (lpcf - noc) / noc : 0.0;
      gap_sum += gap;
      lpcf_sum += lpcf;
      noc_sum += noc;
      if (gap <= 0.10) ++within10;
    }
  }
  const double mean_gap = gap_sum / checked;
  const double pooled = noc_sum > 0.0 ? lpcf_sum / noc_sum - 1.0 : 0.0;
  const bool pass = sandwich_ok == checked && mean_gap <= 0.25;
  report(pass, "criterion 05: optimum <= lpcf on %d/%d seeds; mean gap %.1f%% (limit 25%%), "
               "pooled gap %.1f%%, within 10%% on %d/%d seeds",
         sandwich_ok, checked, pct(mean_gap), pct(pooled), within10, checked);
  CHECK(pass);
}

TEST_CASE("criterion 06: the solvers scale on opposite sides of n = 10 and n = 30") {
  // lpcf must exhaust a default n = 30 instance within 5 s; the permutation
  // search at n = 10 must either blow a 60 s budget or be >= 1000x slower
  // than lpcf at n = 10.
  SolverBudget five_s;
  five_s.time_limit = std::chrono::milliseconds(5000);
  const Instance big = oracle::gen_norm(30, 1);
  const LpcfReport lpcf30 = solve_lpcf(big, five_s);
  const bool lpcf_ok = lpcf30.space_exhausted;

  const Instance mid = oracle::gen_norm(10, 1);
  double lpcf10_ms = 1e300;
  for (int rep = 0; rep < 5; ++rep)
    lpcf10_ms = std::min(lpcf10_ms, solve_lpcf(mid).wall_time.count());

  SolverBudget minute;
  minute.time_limit = std::chrono::milliseconds(60000);
  const NocReport perm10 = solve_noc_exhaustive(mid, minute);
  const double ratio = perm10.wall_time.count() / std::max(lpcf10_ms, 1e-6);
  const bool noc_ok = !perm10.proven_optimal || ratio >= 1000.0;

  const bool pass = lpcf_ok && noc_ok;
  report(pass, "criterion 06: lpcf n=30 exhausted in 5 s: %s (space %.3g, %.0f ms); "
               "perm n=10 %s in %.0f ms = %.0fx lpcf's %.3f ms",
         lpcf_ok ? "yes" : "no", static_cast<double>(lpcf30.reduced_space_size),
         lpcf30.wall_time.count(), perm10.proven_optimal ? "finished" : "timed out",
         perm10.wall_time.count(), ratio, lpcf10_ms);
  CHECK(pass);
}

TEST_CASE("criterion 07: the reduced space stays orders of magnitude below n!") {
  std::vector<double> rss10, rss30;
  bool exhausted_within_budget = true;
  SolverBudget million;
  million.node_limit = 1000000;
  for (std::uint64_t s = 1; s <= 50; ++s) {
    rss10.push_back(static_cast<double>(solve_lpcf(oracle::gen_norm(10, s)).reduced_space_size));
    const LpcfReport rep = solve_lpcf(oracle::gen_norm(30, s), million);
    rss30.push_back(static_cast<double>(rep.reduced_space_size));
    if (rep.space_exhausted && rep.nodes_explored > 1000000) exhausted_within_budget = false;
  }
  const double med10 = oracle::median(rss10);
  const double med30 = oracle::median(rss30);
  const double lim10 = 120.0;      // 5!
  const double lim30 = 3628800.0;  // 10!
  const bool pass = med10 <= lim10 && med30 <= lim30 && exhausted_within_budget;
  report(pass, "criterion 07: median reduced space n=10: %.0f (limit %.0f); n=30: %.3g (limit %.3g); "
               "exhausted runs within 1e6 nodes: %s",
         med10, lim10, med30, lim30, exhausted_within_budget ? "yes" : "no");
  CHECK(pass);
}

namespace {

// Mean network cost per sweep value for one density axis at n = 30.
std::vector<SweepRow> axis_sweep(const std::string& axis, const std::vector<double>& values) {
  SweepSpec spec;
  spec.base.n_total = 30;
  spec.base.seed = 7000;
  spec.axis = axis;
  spec.values = values;
  spec.seeds = 20;
  spec.budget.node_limit = 200000;
  return run_sweep(spec);
}

double drop_pct(const std::vector<SweepRow>& rows) {
  return pct((rows.front().mean_network_cost - rows.back().mean_network_cost) /
             rows.front().mean_network_cost);
}

}  // namespace

TEST_CASE("criterion 08: denser edge links cut the network cost the most") {
  const std::vector<double> values = {0.2, 0.4, 0.6, 0.8};
  const double edge = drop_pct(axis_sweep("edge-density", values));
  const double fog = drop_pct(axis_sweep("fog-density", values));
  const double inter = drop_pct(axis_sweep("inter-density", values));
  int rank = 1;  // rank of the edge-axis drop among the three
  if (fog > edge) ++rank;
  if (inter > edge) ++rank;
  const bool pass = edge > 0.0 && rank <= 2;
  report(pass, "criterion 08: mean-cost drop 0.2 -> 0.8: edge %.1f%%, fog %.1f%%, inter %.1f%% "
               "(edge rank %d of 3)",
         edge, fog, inter, rank);
  CHECK(pass);
}

TEST_CASE("criterion 09: network cost grows with dependence density, then saturates") {
  SweepSpec spec;
  spec.base.n_total = 30;
  spec.base.seed = 8000;
  spec.axis = "dep-density";
  spec.values = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  spec.seeds = 20;
  spec.budget.node_limit = 200000;
  const std::vector<SweepRow> rows = run_sweep(spec);

  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double se_prev = rows[i - 1].stddev_network_cost / std::sqrt(20.0);
    const double se_next = rows[i].stddev_network_cost / std::sqrt(20.0);
    const double pooled = std::sqrt(se_prev * se_prev + se_next * se_next);
    if (rows[i].mean_network_cost < rows[i - 1].mean_network_cost - pooled) monotone = false;
  }
  const std::size_t last = rows.size() - 1;
  const double tail = (rows[last].mean_network_cost - rows[last - 2].mean_network_cost) /
                      rows[last - 2].mean_network_cost;
  const bool pass = monotone && tail < 0.10;
  report(pass, "criterion 09: non-decreasing within noise: %s; relative rise over the last three "
               "points %.1f%% (limit 10%%)",
         monotone ? "yes" : "no", pct(tail));
  CHECK(pass);
}

namespace {

std::string shell(const std::string& cmd, int* status = nullptr) {
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int rc = pclose(pipe);
  if (status) *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("criterion 10: repeated cli runs are byte-identical") {
  const std::string efc = EFC_BIN;
  const fs::path dir = fs::temp_directory_path() / "efc_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string at = " -o \"" + (dir / "x").string();

  const bool gen_same = shell(efc + " gen --n 10 --seed 99") == shell(efc + " gen --n 10 --seed 99");

  shell(efc + " gen --n 9 --seed 42" + at + "i.json\"");
  const std::string solve = efc + " solve -i \"" + (dir / "xi.json").string() + "\" --solver lpcf";
  const bool solve_same = shell(solve) == shell(solve);

  const std::string bench = efc + " bench --sizes 5,6 --solvers lap,lpcf --seeds 2 --seed 3" + at +
                            "b.csv\"";
  shell(bench);
  const std::string bench_first = slurp(dir / "xb.csv");
  shell(bench);
  const bool bench_same = slurp(dir / "xb.csv") == bench_first;

  const std::string sweep_args =
      " sweep --axis dep-density --values 0.2,0.6 --n 8 --seeds 2 --seed 4" + at;
  shell(efc + sweep_args + "s1.csv\"");
  shell(efc + sweep_args + "s2.csv\"");
  const bool sweep_same = slurp(dir / "xs1.csv") == slurp(dir / "xs2.csv");

  const bool pass = gen_same && solve_same && bench_same && sweep_same;
  report(pass, "criterion 10: byte-identical reruns — gen: %s, solve: %s, bench: %s, sweep: %s",
         gen_same ? "yes" : "no", solve_same ? "yes" : "no", bench_same ? "yes" : "no",
         sweep_same ? "yes" : "no");
  CHECK(pass);
}
