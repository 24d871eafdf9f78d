#pragma once

// Degree pruning of the innermost tiling level.
//
// For each level s-2 cube C and each adjacent same-level cube A of
// codimension <= d(C), every vertex of S_C with blue degree >= cut * |S_A|
// into the original S_A is removed.  The pruned sets T_C must keep at least
// half their mass (abort otherwise) and afterwards satisfy the max-degree
// certificate: from the higher-codimension cube of every adjacent pair,
// every surviving vertex sees < bound * |T'| blue neighbors in the other
// pruned set.

#include <cstdint>
#include <string>
#include <vector>

#include "qramsey/tiling.hpp"

namespace qramsey {

struct RemovalEntry {
  CubeId cube;     // C whose set was pruned
  CubeId against;  // adjacent cube A that triggered the removals
  int rho = 0;
  int delta = 0;
  std::uint64_t hit = 0;  // vertices of S_C at or over the cut against S_A
};

struct MaxDegEntry {
  CubeId from;
  CubeId to;
  int delta = 0;
  std::uint64_t max_deg = 0;
  std::uint64_t target_size = 0;
  bool pass = false;
};

struct PruneResult {
  bool ok = false;
  bool certified = false;  // every max-degree entry passes
  CubeId aborted_cube;
  std::string note;
  // Pruned vertex sets, parallel to tiling level s-2 cube order.
  std::vector<std::vector<Vertex>> pruned;
  std::vector<RemovalEntry> removals;
  std::vector<MaxDegEntry> certification;
  std::uint64_t removed_total = 0;
};

// Requires a complete tiling run.  Removal always counts degrees into the
// original assigned sets, so the outcome is independent of cube order.
PruneResult prune(TilingRun& run);

}  // namespace qramsey
