#pragma once

// JSON documents for instances and assignments.
//
// Emission is canonical: two-space indent, trailing newline, arrays sorted by
// id (pairs by (a, b) with a < b), and a pinned key order — so documents for
// the same data are byte-identical across runs and platforms.  Parsing
// accepts any key order and reports failures as ParseError with the path of
// the offending field.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgefog/generator.hpp"
#include "edgefog/model.hpp"

namespace edgefog {

// Provenance block attached by the generator CLI so a document is
// self-describing and reproducible.
struct InstanceMeta {
  GenParams params;
  bool connectivity_repaired = false;
};

struct ParsedInstance {
  ResourceGraph rg;
  JobGraph jg;
  std::optional<InstanceMeta> meta;
};

std::string emit_instance(const ResourceGraph& rg, const JobGraph& jg,
                          const std::optional<InstanceMeta>& meta = std::nullopt);
ParsedInstance parse_instance(const std::string& text);

// Optional solver facts carried by an assignment document.  Wall-clock time
// is deliberately absent: documents are byte-identical across repeated runs.
struct SolveSummary {
  std::string solver;
  std::optional<bool> proven_optimal;
  std::optional<bool> space_exhausted;
  std::optional<double> lap_value;
  std::optional<std::uint64_t> reduced_space_size;
  std::optional<std::uint64_t> nodes_explored;
};

// The mapping is emitted in slot order as (job id, device id) pairs; a device
// id repeats when the instance assigned several jobs to copies of it.
std::string emit_assignment(const Instance& inst, const Assignment& asg,
                            const SolveSummary& summary = {});

struct ParsedAssignment {
  std::vector<std::pair<int, int>> mapping;  // (job id, device id)
  double processing_cost = 0.0;
  double network_cost = 0.0;
};

ParsedAssignment parse_assignment(const std::string& text);

// Recomputes both costs of an id-level mapping against an instance,
// resolving repeated device ids to successive copies.  Used to audit
// emitted documents.  Throws ParseError when the mapping does not cover
// the instance exactly.
std::pair<double, double> costs_from_mapping(
    const Instance& inst, const std::vector<std::pair<int, int>>& mapping);

}  // namespace edgefog
