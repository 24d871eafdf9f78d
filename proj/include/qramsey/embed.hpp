#pragma once

// Greedy embedding of a red Q_n.
//
// Cubes of the innermost tiling level are processed in decreasing
// codimension (ties in reverse insertion order), vertices of each cube in
// ascending index.  Each cube vertex takes the smallest pruned-set vertex
// that is unused and red to every already-embedded neighbor, inside the cube
// and across adjacent cubes.  The forbidden-class audit sizes the three
// obstruction classes at every step against the regime caps.
//
// The baseline embedder handles the dense-host regime on its own: it
// measures the maximum blue degree d_max and, provided N >= d_max * n + 2^n,
// embeds Q_n greedily into the whole vertex set.

#include <cstdint>
#include <string>
#include <vector>

#include "qramsey/prune.hpp"
#include "qramsey/tiling.hpp"

namespace qramsey {

struct ForbiddenAudit {
  CubeId cube;
  Vertex cube_vertex = 0;  // vertex of Q_n being embedded
  std::uint64_t external = 0;
  std::uint64_t internal = 0;
  std::uint64_t occupied = 0;
  std::uint64_t t_size = 0;
  bool within = true;
};

struct EmbedResult {
  bool success = false;
  Embedding embedding;
  CubeId failed_cube;
  std::uint64_t failed_vertex = 0;
  std::string note;
  std::vector<CubeId> order;  // processing order of innermost-level cubes
  std::uint64_t audited_steps = 0;
  std::vector<ForbiddenAudit> violations;  // audit entries over a cap
};

// audit_forbidden controls the per-step obstruction sizing (quadratic in
// |T_C| per step; intended on for paper-exact runs).
EmbedResult greedy_embed(const TilingRun& run, const PruneResult& pruned,
                         bool audit_forbidden);

struct BaselineResult {
  bool refused = false;
  std::string refusal;
  std::uint64_t d_max = 0;
  bool success = false;
  Embedding embedding;
  std::string note;
};

BaselineResult baseline_embed(const Coloring& c, int n);

}  // namespace qramsey
