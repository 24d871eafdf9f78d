#pragma once

// Leveled blue-clique-free families extracted from a colored K_N.
//
// Level 0 is the whole vertex set.  Level l refines level l-1: each parent
// set is split, stage by stage d = 0..codim_max(l), into blue-K_{s-l}-free
// subsets of exact size multiplier(l) * 2^(n - codim(parent) - d).  A parent
// whose extracted mass stays below half its size contributes its remainder
// as an exceptional set (relative codimension 0); exceptional parents pass
// through unchanged.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qramsey/coloring.hpp"
#include "qramsey/cubes.hpp"

namespace qramsey {

// Regime constant tables.  paper() pins the published constants per s;
// engineering() admits arbitrary scaled-down constants, with every guarantee
// demoted to a runtime check and reports stamped accordingly.
struct RegimeParams {
  int s = 3;
  int n = 1;
  std::uint64_t N = 0;
  bool paper_exact = true;
  std::vector<std::uint64_t> multipliers;  // level l at index l-1, l in 1..s-2
  std::vector<int> codim_maxes;            // same indexing

  static RegimeParams paper(int s, int n, std::uint64_t N);
  static RegimeParams engineering(int s, int n, std::uint64_t N,
                                  std::vector<std::uint64_t> multipliers = {},
                                  std::vector<int> codim_maxes = {});

  std::uint64_t multiplier(int level) const;
  int codim_max(int level) const;

  // Exact population bound of the regime: 7000*2^n (s=3), 2^46*2^n (s=4),
  // s^(15s^2)*2^n in general; evaluated in exact big-integer arithmetic.
  bool meets_population_bound() const;
  std::string population_bound_text() const;

  // multiplier(level) * 2^(n - parent_codim - stage) when that is a positive
  // integer, otherwise nullopt (the stage is skipped).
  std::optional<std::uint64_t> target_size(int level, int parent_codim,
                                           int stage) const;

  // Properness: blue edge budget between assigned sets at levels la, lb with
  // dominating parameter delta.  True iff `blue` reaches the threshold
  // (ratio of |A||B|: 1/(16 delta^2) for s=3, (8 delta)^(la+lb-6) for s=4,
  // (4 s^2 delta)^(la+lb-2s) in general); comparisons are exact integer
  // arithmetic, saturating multiplies treat overflow as over-threshold.
  bool edges_bad(std::uint64_t blue, std::uint64_t size_a, std::uint64_t size_b,
                 int la, int lb, int delta) const;

  // Phase-1 discard mass budget: |parent| / (8 delta) for s in {3,4},
  // |parent| / (4 s^2 delta) in general, as (num, den) of a fraction.
  std::pair<std::uint64_t, std::uint64_t> bad_mass_budget(
      std::uint64_t parent_size, int delta) const;

  // Pruning: vertex removed iff deg >= cut * |S_A| with cut = 1/(8 delta)
  // for s in {3,4} and 1/(4 s^2 delta) in general.
  bool prune_cut_hit(std::uint64_t deg, std::uint64_t size_a, int delta) const;

  // Post-prune certificate: deg < bound * |T'| with bound = 1/(4 delta) for
  // s in {3,4} and 1/(2 s^2 delta) in general.
  bool maxdeg_ok(std::uint64_t deg, std::uint64_t size_t_, int delta) const;

  // Diagnostic bound on blue degree from a parent vertex into the union of
  // its level-l children with relative codimension >= i:
  // 2 * multiplier(l) * 2^(n - parent_codim - i), as (num, den).
  std::pair<std::uint64_t, std::uint64_t> union_degree_bound(
      int level, int parent_codim, int i) const;

  // Internal blue degree bound for level s-2 sets of codimension d:
  // 2^(n-d) / (2n) for s = 3, 2^(n-d) / n otherwise, as (num, den).
  std::pair<std::uint64_t, std::uint64_t> internal_degree_bound(int codim) const;

  // Greedy embedding forbidden-class caps: external blue <= |T|/ext_den,
  // internal blue <= 2^(n-d)/int_den.
  int external_cap_den() const { return s == 3 ? 4 : 2; }
  int internal_cap_den() const { return s == 3 ? 2 : 1; }

  std::string mode_text() const {
    return paper_exact ? "paper-exact" : "engineering";
  }
};

struct LeveledSet {
  int id = -1;
  int level = 0;
  int parent = -1;  // set id; -1 for the root
  std::vector<int> level_codims;  // d_1..d_level
  bool exceptional = false;
  enum class Freeness { exact_verified, by_construction, assumed };
  Freeness freeness = Freeness::assumed;
  std::vector<Vertex> vertices;  // ascending

  int codim() const;
  int level_codim(int r) const;  // d_r, 1 <= r <= level
  std::uint64_t size() const { return vertices.size(); }
};

const char* to_string(LeveledSet::Freeness f);

struct FamilyForest {
  int s = 0;
  int n = 0;
  std::vector<LeveledSet> sets;             // indexed by id
  std::vector<std::vector<int>> level_ids;  // per level, extraction order
  std::vector<std::vector<int>> kids;       // children ids per set id

  int root_id() const { return level_ids.at(0).at(0); }
  const LeveledSet& set(int id) const { return sets.at(id); }
  const std::vector<int>& children(int id) const { return kids.at(id); }
  int add_set(LeveledSet s);  // assigns the id

  // Structural invariants: child vertices within parent, disjoint siblings,
  // codim bookkeeping, exceptional propagation.  Empty string when valid.
  std::string validate() const;
};

struct FinderOptions {
  std::size_t clique_cap = 2000;   // exact clique search budget
  int pivot_fail_cap = 64;         // strategy (a) probes per (parent, stage)
  std::size_t exact_pool_cap = 64; // strategy (d) ceiling
};

enum class FinderStrategy {
  auto_chain,
  neighborhood,  // (a) harvest the blue neighborhood of a rich pivot
  greedy_red,    // (b) grow a red clique by ascending scan (t = 2)
  walk,          // (c) pivot-descent walk toward red K_m or blue K_t
  exact,         // (d) branch-and-bound over small pools
};

const char* to_string(FinderStrategy s);

struct FoundSet {
  std::vector<Vertex> vertices;  // exactly m, ascending
  FinderStrategy strategy = FinderStrategy::auto_chain;
  LeveledSet::Freeness freeness = LeveledSet::Freeness::assumed;
};

// Carries strategy (a)'s failed-pivot memo across extractions of one stage;
// blue pool-degrees only decrease as the pool shrinks, so a failed pivot
// never has to be probed again within the stage.
struct FinderState {
  int failed_pivots = 0;
  bool neighborhood_disabled = false;
};

// Searches pool (ascending order) for a blue-K_t-free subset of exactly m
// vertices.  Sound but incomplete: a nullopt answer does not certify
// absence.  pool_freeness is the caller's certificate that pool itself is
// blue-K_{t+1}-free, which lets strategy (a) certify its result by
// construction when exact verification is out of budget.
std::optional<FoundSet> find_free_subset(
    const Coloring& c, const std::vector<Vertex>& pool, int t, std::uint64_t m,
    const FinderOptions& opt, FinderStrategy strategy = FinderStrategy::auto_chain,
    LeveledSet::Freeness pool_freeness = LeveledSet::Freeness::assumed,
    FinderState* state = nullptr);

struct ExtractionEvent {
  int level = 0;
  int parent = -1;
  int stage = 0;
  int set_id = -1;
  std::uint64_t size = 0;
  FinderStrategy strategy = FinderStrategy::auto_chain;
  bool exceptional = false;
};

struct BuildStats {
  std::vector<ExtractionEvent> events;
};

// Children of one parent at `level` by iterated extraction; appends them to
// the forest in extraction order and returns their ids.  Finder failures
// surface as std::runtime_error tagged with the (parent, stage) context.
std::vector<int> build_family(const Coloring& c, FamilyForest& forest,
                              int parent_id, int level,
                              const RegimeParams& params,
                              const FinderOptions& opt,
                              BuildStats* stats = nullptr);

// Root [N] plus every level 1..s-2.  root_freeness records the caller's
// evidence that the coloring has no blue K_s.
FamilyForest build_forest(const Coloring& c, const RegimeParams& params,
                          const FinderOptions& opt,
                          LeveledSet::Freeness root_freeness,
                          BuildStats* stats = nullptr);

struct UnionDegreeEntry {
  int level = 0;
  int parent = -1;
  int i = 0;
  std::uint64_t union_size = 0;
  std::uint64_t measured = 0;
  std::uint64_t bound_num = 0;
  std::uint64_t bound_den = 1;
  bool pass = true;
};

struct InternalDegreeEntry {
  int set_id = -1;
  std::uint64_t measured = 0;
  std::uint64_t bound_num = 0;
  std::uint64_t bound_den = 1;
  bool pass = true;
};

struct DegreeReport {
  std::vector<UnionDegreeEntry> union_checks;
  std::vector<InternalDegreeEntry> internal_checks;
  bool all_pass = true;
};

// Empirical verification of the preprocessing degree bounds: for every
// parent and i >= 1, the max blue degree from parent vertices into the union
// of children with relative codimension >= i; and the internal max blue
// degree of every level s-2 set.
DegreeReport check_degree_bounds(const Coloring& c, const FamilyForest& forest,
                                 const RegimeParams& params,
                                 int thread_count = 1);

}  // namespace qramsey
