#pragma once

// The multi-level tiling algorithm: tile Q_n with special cubes, one
// insertion per step, assigning to each cube a set of the leveled family so
// that the assignment stays proper.
//
// A step picks the lexicographically smallest vertex covered l < s-1 times,
// forms the level-l candidate at the last inserted codimension, discards the
// children of the covering parent's set that are bad against cubes of lower
// adjacency level (phase 1), then grows the candidate codimension until some
// surviving set is also good against the level-l adjacent cubes (phase 2).
// Failure to place a cube is a first-class outcome with per-codimension
// diagnostics, never an exception; breaches of claimed invariants throw
// std::logic_error.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qramsey/coloring.hpp"
#include "qramsey/cubes.hpp"
#include "qramsey/families.hpp"

namespace qramsey {

struct Assignment {
  std::vector<std::vector<int>> set_of;  // parallel to MultiTiling::levels

  int set_id(CubeId id) const { return set_of.at(id.level).at(id.index); }
};

struct ProperCheck {
  bool ok = true;
  std::string reason;  // empty when ok
};

// Phase-1 discard ledger entry: mass of sets thrown away against one
// adjacent cube, compared to the budget |S_parent| / (8 delta) (s <= 4) or
// |S_parent| / (4 s^2 delta).
struct BadSetRecord {
  CubeId against;
  int rho = 0;
  int delta = 0;
  std::uint64_t discarded_mass = 0;
  std::uint64_t budget_num = 0;
  std::uint64_t budget_den = 1;
  bool within_budget = true;
};

struct StepOutcome {
  enum class Kind { inserted, complete, failed };
  Kind kind = Kind::complete;
  std::uint64_t step_index = 0;
  Vertex pivot = 0;
  int level = 0;
  CubeId inserted;
  int set_id = -1;

  struct CandidateDiag {
    int i = 0;           // relative codimension tried
    int cube_codim = 0;
    std::uint64_t candidate_sets = 0;  // phase-1 survivors with d_l == i
    std::uint64_t adjacent_count = 0;  // |A^(l)| for this candidate
    std::uint64_t rejected = 0;        // candidates rejected against A^(l)
  };
  std::vector<CandidateDiag> diagnostics;  // per failed codimension (and the
                                           // successful one, last)
  std::vector<BadSetRecord> bad_sets;
  std::string note;
};

struct AuditResult {
  bool pass = true;
  std::vector<std::string> failures;
  std::string text;  // deterministic rendering
};

class TilingRun {
 public:
  TilingRun(const Coloring& oracle, const FamilyForest& forest,
            const RegimeParams& params, int thread_count = 1);

  // Cached exact blue edge count between two family sets.
  std::uint64_t count_blue(int set_a, int set_b);

  StepOutcome step();
  // Runs until complete or failed; a breach of a claimed invariant
  // (including a chosen cube failing the full properness re-check) throws
  // std::logic_error.
  StepOutcome run_to_completion();

  // Conditions of a proper assignment for candidate c against the current
  // tiling: (1) matching level and relative codimension, (2) set nesting
  // along cube nesting, (3) blue edge budget against every adjacent
  // assigned cube.
  ProperCheck is_proper(const LeveledCube& c, int set_id);

  // Full recount on a completed tiling: structure, coverage, partition per
  // level, refinement, and all three conditions for every pair with fresh
  // edge counts (the cache is bypassed).
  AuditResult audit() const;

  const MultiTiling& tiling() const { return tiling_; }
  const Assignment& assignment() const { return assign_; }
  const FamilyForest& forest() const { return *forest_; }
  const RegimeParams& params() const { return params_; }
  const Coloring& oracle() const { return *oracle_; }
  const std::vector<StepOutcome>& trace() const { return trace_; }
  bool complete() const;

 private:
  const Coloring* oracle_;
  const FamilyForest* forest_;
  RegimeParams params_;
  int thread_count_;
  MultiTiling tiling_;
  Assignment assign_;
  std::vector<std::uint8_t> cover_;
  Vertex scan_from_ = 0;
  std::vector<char> set_assigned_;
  std::map<std::pair<int, int>, std::uint64_t> edge_cache_;
  std::vector<StepOutcome> trace_;

  CubeId insert_assigned(const LeveledCube& c, int set_id);
  int last_codim() const;
};

}  // namespace qramsey
