#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qramsey/tiling.hpp"

using namespace qramsey;

namespace {

LeveledSet make_set(int level, int parent, std::vector<int> codims,
                    std::vector<Vertex> vertices) {
  LeveledSet s;
  s.level = level;
  s.parent = parent;
  s.level_codims = std::move(codims);
  s.freeness = LeveledSet::Freeness::exact_verified;
  s.vertices = std::move(vertices);
  return s;
}

// Root [0, N) plus level-1 sets of four consecutive vertices each, one per
// given relative codimension.
FamilyForest halved_forest(int s, int n, std::uint64_t N,
                           const std::vector<int>& codims) {
  FamilyForest f;
  f.s = s;
  f.n = n;
  f.level_ids.resize(s - 1);
  std::vector<Vertex> all(N);
  std::iota(all.begin(), all.end(), 0);
  f.add_set(make_set(0, -1, {}, all));
  Vertex at = 0;
  for (int d : codims) {
    std::vector<Vertex> block;
    for (Vertex v = at; v < at + 4; ++v) block.push_back(v);
    at += 4;
    f.add_set(make_set(1, 0, {d}, std::move(block)));
  }
  return f;
}

}  // namespace

TEST_CASE("an all-red pair of halves tiles Q_2 as two codim-1 cubes") {
  Coloring c = Coloring::explicit_matrix(8);
  RegimeParams params = RegimeParams::engineering(3, 2, 8, {2}, {2});
  FamilyForest forest = halved_forest(3, 2, 8, {1, 1});
  REQUIRE(forest.validate().empty());

  TilingRun run(c, forest, params);
  CHECK_FALSE(run.complete());
  StepOutcome last = run.run_to_completion();
  CHECK(last.kind == StepOutcome::Kind::complete);
  CHECK(run.complete());
  CHECK(run.tiling().cube_count() == 3);
  CHECK(run.tiling().level_complete(1));
  REQUIRE(run.trace().size() == 3);

  const StepOutcome& root = run.trace()[0];
  CHECK(root.level == 0);
  CHECK(root.set_id == forest.root_id());

  const StepOutcome& first = run.trace()[1];
  CHECK(first.pivot == 0);
  CHECK(first.set_id == 1);
  CHECK(run.tiling().at(first.inserted).cube == parse_cube("0*"));
  // The d_1 = 0 shell has no matching set; the diagnostics record it.
  REQUIRE(first.diagnostics.size() == 2);
  CHECK(first.diagnostics[0].i == 0);
  CHECK(first.diagnostics[0].candidate_sets == 0);
  CHECK(first.diagnostics[1].i == 1);
  CHECK(first.diagnostics[1].candidate_sets == 1);

  const StepOutcome& second = run.trace()[2];
  CHECK(second.pivot == 2);
  CHECK(second.set_id == 2);
  CHECK(run.tiling().at(second.inserted).cube == parse_cube("1*"));
  CHECK(second.diagnostics.back().adjacent_count == 1);
  CHECK(second.bad_sets.empty());  // no lower adjacency level exists at s=3

  AuditResult audit = run.audit();
  CHECK(audit.pass);
  CHECK(audit.failures.empty());

  // Properness diagnoses mismatches precisely.
  LeveledCube cube01{parse_cube("01"), 1, {2}};
  CHECK_FALSE(run.is_proper(cube01, 1).ok);
  CHECK(run.is_proper(cube01, 1).reason ==
        "set relative codimension differs from cube");
  CHECK(run.is_proper(cube01, forest.root_id()).reason ==
        "set level differs from cube level");
}

TEST_CASE("a blue-saturated set is rejected in phase 2 and the next one wins") {
  Coloring c = Coloring::explicit_matrix(12);
  // Set B = {4..7} is fully blue against A = {0..3}; C = {8..11} stays red.
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 4; v < 8; ++v) c.set_color(u, v, Color::blue);
  RegimeParams params = RegimeParams::engineering(3, 2, 12, {2}, {2});
  FamilyForest forest = halved_forest(3, 2, 12, {1, 1, 1});
  REQUIRE(forest.validate().empty());

  TilingRun run(c, forest, params);
  StepOutcome last = run.run_to_completion();
  CHECK(last.kind == StepOutcome::Kind::complete);
  REQUIRE(run.trace().size() == 3);
  const StepOutcome& second = run.trace()[2];
  CHECK(second.set_id == 3);  // C; B was rejected against A
  REQUIRE(second.diagnostics.size() == 1);
  CHECK(second.diagnostics[0].candidate_sets == 2);
  CHECK(second.diagnostics[0].adjacent_count == 1);
  CHECK(second.diagnostics[0].rejected == 1);
  CHECK(run.audit().pass);

  // The edge-count cache serves repeated queries without recounting.
  std::uint64_t before = run.count_blue(1, 2);
  CHECK(before == 16);
  CHECK(run.count_blue(2, 1) == 16);  // same unordered key
}

TEST_CASE("with only saturated sets the step fails with diagnostics") {
  Coloring c = Coloring::explicit_matrix(8);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 4; v < 8; ++v) c.set_color(u, v, Color::blue);
  RegimeParams params = RegimeParams::engineering(3, 2, 8, {2}, {2});
  FamilyForest forest = halved_forest(3, 2, 8, {1, 1});

  TilingRun run(c, forest, params);
  StepOutcome last = run.run_to_completion();
  CHECK(last.kind == StepOutcome::Kind::failed);
  CHECK(last.pivot == 2);
  CHECK(last.note == "no proper set at any codimension in [1, 2]");
  REQUIRE(last.diagnostics.size() == 2);
  CHECK(last.diagnostics[0].i == 1);
  CHECK(last.diagnostics[0].candidate_sets == 1);
  CHECK(last.diagnostics[0].rejected == 1);
  CHECK(last.diagnostics[1].i == 2);
  CHECK(last.diagnostics[1].candidate_sets == 0);
  CHECK_FALSE(run.complete());
  CHECK_FALSE(run.audit().pass);
}

TEST_CASE("phase 1 ledger records discards against lower adjacency levels") {
  // s=4 double tiling of Q_2.  The left half carries big sets (P over cube
  // 0* with children P1/P2 on 00/01); the right half is tiled by two
  // codim-2 level-1 sets R and T whose small children live at relative
  // codimension 0.  A single blue edge from R's child R2 into P is under
  // R's own level-1 budget (threshold: 2 edges) but saturates R2
  // (threshold: 1), so inserting the level-2 cube over R discards R2 in
  // phase 1 and places R1 instead.
  Coloring c = Coloring::explicit_matrix(1024);
  c.set_color(520, 256, Color::blue);
  RegimeParams params =
      RegimeParams::engineering(4, 2, 1024, {256, 256}, {2, 2});

  auto range = [](Vertex lo, Vertex hi) {
    std::vector<Vertex> v;
    for (Vertex x = lo; x < hi; ++x) v.push_back(x);
    return v;
  };
  FamilyForest forest;
  forest.s = 4;
  forest.n = 2;
  forest.level_ids.resize(3);
  forest.add_set(make_set(0, -1, {}, range(0, 1024)));        // 0: root
  forest.add_set(make_set(1, 0, {1}, range(0, 512)));         // 1: P
  forest.add_set(make_set(1, 0, {2}, range(512, 768)));       // 2: R
  forest.add_set(make_set(1, 0, {2}, range(768, 1024)));      // 3: T
  forest.add_set(make_set(2, 1, {1, 1}, range(0, 256)));      // 4: P1
  forest.add_set(make_set(2, 1, {1, 1}, range(256, 512)));    // 5: P2
  forest.add_set(make_set(2, 2, {2, 0}, range(512, 520)));    // 6: R1
  forest.add_set(make_set(2, 2, {2, 0}, range(520, 528)));    // 7: R2
  forest.add_set(make_set(2, 3, {2, 0}, range(768, 776)));    // 8: T1
  REQUIRE(forest.validate().empty());

  TilingRun run(c, forest, params);
  StepOutcome last = run.run_to_completion();
  CHECK(last.kind == StepOutcome::Kind::complete);
  REQUIRE(run.trace().size() == 8);

  // whole, 0*->P, 00->P1, 01->P2, 10->R, 10(level 2)->R1, 11->T, 11(l2)->T1.
  CHECK(run.trace()[4].set_id == 2);
  const StepOutcome& r_child = run.trace()[5];
  CHECK(r_child.level == 2);
  CHECK(r_child.pivot == 2);
  CHECK(r_child.set_id == 6);  // R1: R2 died in phase 1
  REQUIRE(r_child.bad_sets.size() == 2);
  const BadSetRecord& vs_p = r_child.bad_sets[0];
  CHECK(vs_p.against == CubeId{1, 0});
  CHECK(vs_p.rho == 1);
  CHECK(vs_p.delta == 2);
  CHECK(vs_p.discarded_mass == 8);
  CHECK(vs_p.budget_num == 256);  // |R| / (8 delta)
  CHECK(vs_p.budget_den == 16);
  CHECK(vs_p.within_budget);
  const BadSetRecord& vs_p1 = r_child.bad_sets[1];
  CHECK(vs_p1.against == CubeId{2, 0});
  CHECK(vs_p1.discarded_mass == 0);
  CHECK(vs_p1.within_budget);

  // The last insertion sees four lower-adjacent cubes, none discarding.
  const StepOutcome& t_child = run.trace()[7];
  CHECK(t_child.set_id == 8);
  CHECK(t_child.bad_sets.size() == 4);
  for (const BadSetRecord& rec : t_child.bad_sets) {
    CHECK(rec.discarded_mass == 0);
    CHECK(rec.within_budget);
  }

  AuditResult audit = run.audit();
  CHECK(audit.pass);
}

TEST_CASE("audit recounts edges fresh while count_blue serves the cache") {
  Coloring c = Coloring::explicit_matrix(8);
  RegimeParams params = RegimeParams::engineering(3, 2, 8, {2}, {2});
  FamilyForest forest = halved_forest(3, 2, 8, {1, 1});
  TilingRun run(c, forest, params);
  CHECK(run.run_to_completion().kind == StepOutcome::Kind::complete);
  CHECK(run.count_blue(1, 2) == 0);
  CHECK(run.audit().pass);

  // Saturate the two halves against each other after the fact: the cache
  // still answers zero, the audit's fresh recount flags the pair.
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 4; v < 8; ++v) c.set_color(u, v, Color::blue);
  CHECK(run.count_blue(1, 2) == 0);
  AuditResult audit = run.audit();
  CHECK_FALSE(audit.pass);
  REQUIRE(!audit.failures.empty());
  bool mentions_budget = false;
  for (const std::string& f : audit.failures)
    mentions_budget |= f.find("budget") != std::string::npos;
  CHECK(mentions_budget);
}

TEST_CASE("constructor rejects mismatched forest or oracle") {
  Coloring c = Coloring::explicit_matrix(8);
  RegimeParams params = RegimeParams::engineering(3, 2, 8, {2}, {2});
  FamilyForest forest = halved_forest(3, 2, 8, {1, 1});
  FamilyForest wrong_n = halved_forest(3, 3, 8, {1, 1});
  CHECK_THROWS_AS(TilingRun(c, wrong_n, params), std::invalid_argument);
  Coloring small = Coloring::explicit_matrix(7);
  CHECK_THROWS_AS(TilingRun(small, forest, params), std::invalid_argument);
}
