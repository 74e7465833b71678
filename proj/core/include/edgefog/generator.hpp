#pragma once

// Seeded topology simulator.  Produces a two-layer resource graph (edge
// devices: weak and sparsely linked; fog devices: strong and densely linked)
// plus a job graph with random pairwise dependencies.
//
// Randomness is mt19937_64 with the portable draw helpers in rng.hpp.  The
// draw order is pinned and golden files depend on it:
//   1. edge device powers, ascending id;
//   2. fog device powers, ascending id;
//   3. job sizes, ascending id;
//   4. per device pair (a < b, lexicographic): an inclusion coin, then the
//      link cost only if included;
//   5. per job pair (a < b, lexicographic): a dependence coin.
// The connectivity repair pass draws nothing.

#include <cstdint>
#include <string>
#include <vector>

#include "edgefog/model.hpp"

namespace edgefog {

// Inclusive integer range.
struct IntRange {
  int lo = 0;
  int hi = 0;
};

struct GenParams {
  int n_total = 10;  // devices == jobs

  // Device split between the layers; must sum to 1.  The edge count is
  // n_total * edge_fraction rounded half away from zero.
  double edge_fraction = 0.6;
  double fog_fraction = 0.4;

  // Probability that a candidate device pair is linked, by layer pair, and
  // that a job pair is dependent (weight 1).
  double edge_density = 0.2;
  double fog_density = 0.6;
  double inter_density = 0.5;
  double dep_density = 0.2;

  IntRange edge_power{2, 5};
  IntRange fog_power{7, 9};
  IntRange job_size{2, 6};

  IntRange cost_edge_edge{1, 4};
  IntRange cost_fog_fog{1, 2};
  IntRange cost_edge_fog{4, 8};

  std::uint64_t seed = 1;
};

struct Generated {
  ResourceGraph rg;
  JobGraph jg;
  // True when the sampled link graph was disconnected and a minimum set of
  // spanning links (at the layer pair's maximum cost) was added.
  bool connectivity_repaired = false;
};

// Throws ParamInvalid when params are outside their domain.
Generated generate(const GenParams& params);

// Clones of `base` with `axis` (one of "edge-density", "fog-density",
// "inter-density", "dep-density") set to each value; point i gets seed
// base.seed + i.
std::vector<GenParams> sweep_params(const GenParams& base,
                                    const std::string& axis,
                                    const std::vector<double>& values);

}  // namespace edgefog
