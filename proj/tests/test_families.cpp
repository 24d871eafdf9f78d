#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qramsey/families.hpp"

using namespace qramsey;

namespace {

bool has_free_subset_naive(const Coloring& c, const std::vector<Vertex>& pool,
                           int t, int m) {
  int k = static_cast<int>(pool.size());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (std::popcount(mask) != m) continue;
    std::vector<Vertex> sub;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) sub.push_back(pool[i]);
    bool free = true;
    // any blue K_t inside sub?
    for (std::uint32_t inner = 0; inner < (1u << m) && free; ++inner) {
      if (std::popcount(inner) != t) continue;
      bool all_blue = true;
      for (int i = 0; i < m && all_blue; ++i)
        for (int j = i + 1; j < m && all_blue; ++j)
          if ((inner >> i & 1) && (inner >> j & 1) &&
              !c.blue(sub[i], sub[j]))
            all_blue = false;
      if (all_blue) free = false;
    }
    if (free) return true;
  }
  return false;
}

Coloring all_blue_matrix(std::uint64_t N) {
  Coloring m = Coloring::explicit_matrix(N);
  for (Vertex u = 0; u < N; ++u)
    for (Vertex v = u + 1; v < N; ++v) m.set_color(u, v, Color::blue);
  return m;
}

}  // namespace

TEST_CASE("regime tables pin the published constants") {
  RegimeParams p3 = RegimeParams::paper(3, 6, 448000);
  CHECK(p3.multipliers == std::vector<std::uint64_t>{4});
  CHECK(p3.codim_maxes == std::vector<int>{6});  // ceil(log2 6) + 3
  CHECK(p3.paper_exact);
  CHECK(p3.mode_text() == "paper-exact");
  CHECK(RegimeParams::paper(3, 8, 1).codim_maxes == std::vector<int>{6});
  CHECK(RegimeParams::paper(3, 9, 1).codim_maxes == std::vector<int>{7});
  CHECK(RegimeParams::paper(3, 1, 1).codim_maxes == std::vector<int>{3});

  RegimeParams p4 = RegimeParams::paper(4, 6, 1);
  CHECK(p4.multipliers ==
        std::vector<std::uint64_t>{std::uint64_t{1} << 18, 8});
  CHECK(p4.codim_maxes == std::vector<int>{21, 6});
  CHECK(p4.multiplier(1) == (std::uint64_t{1} << 18));
  CHECK(p4.multiplier(2) == 8);
  CHECK(p4.codim_max(2) == 6);
  CHECK_THROWS_AS(p4.multiplier(0), std::invalid_argument);
  CHECK_THROWS_AS(p4.multiplier(3), std::invalid_argument);

  // No machine-sized N satisfies the general-regime population bound.
  CHECK_THROWS_AS(RegimeParams::paper(5, 4, ~std::uint64_t{0}),
                  std::domain_error);
  CHECK_THROWS_AS(RegimeParams::paper(2, 4, 100), std::invalid_argument);

  RegimeParams e4 = RegimeParams::engineering(4, 6, 100000);
  CHECK_FALSE(e4.paper_exact);
  CHECK(e4.mode_text() == "engineering");
  CHECK(e4.multipliers == std::vector<std::uint64_t>{64, 8});
  CHECK(e4.codim_maxes == std::vector<int>{10, 7});
  RegimeParams e5 = RegimeParams::engineering(5, 6, 100000);
  CHECK(e5.multipliers == std::vector<std::uint64_t>{256, 64, 16});
  CHECK(e5.codim_maxes == std::vector<int>{12, 10, 8});
  RegimeParams custom =
      RegimeParams::engineering(3, 6, 1000, {8}, {4});
  CHECK(custom.multipliers == std::vector<std::uint64_t>{8});
  CHECK(custom.codim_maxes == std::vector<int>{4});
  CHECK_THROWS_AS(RegimeParams::engineering(4, 6, 1, {4}, {3}),
                  std::invalid_argument);
}

TEST_CASE("population bounds are exact") {
  CHECK(RegimeParams::paper(3, 6, 448000).meets_population_bound());
  CHECK_FALSE(RegimeParams::paper(3, 6, 447999).meets_population_bound());
  CHECK(RegimeParams::paper(4, 1, std::uint64_t{1} << 47)
            .meets_population_bound());
  CHECK_FALSE(RegimeParams::paper(4, 1, (std::uint64_t{1} << 47) - 1)
                  .meets_population_bound());
  CHECK_FALSE(RegimeParams::engineering(5, 1, ~std::uint64_t{0})
                  .meets_population_bound());
  CHECK(RegimeParams::paper(3, 1, 1).population_bound_text() == "7000*2^n");
  CHECK(RegimeParams::paper(4, 1, 1).population_bound_text() == "2^46*2^n");
  CHECK(RegimeParams::engineering(5, 1, 1).population_bound_text() ==
        "s^(15*s^2)*2^n");
}

TEST_CASE("target sizes scale by powers of two and skip fractional stages") {
  RegimeParams p = RegimeParams::paper(3, 6, 448000);
  CHECK(p.target_size(1, 0, 0) == 256);  // 4 * 2^6
  CHECK(p.target_size(1, 0, 6) == 4);
  CHECK(p.target_size(1, 4, 1) == 8);
  CHECK(p.target_size(1, 6, 1) == 2);   // 4 / 2
  CHECK(p.target_size(1, 6, 2) == 1);   // 4 / 4
  CHECK(p.target_size(1, 6, 3) == std::nullopt);  // 4 / 8
  RegimeParams q = RegimeParams::engineering(3, 26, 1);
  CHECK(q.target_size(1, 0, 0) == (std::uint64_t{4} << 26));
}

TEST_CASE("threshold predicates compare in exact integer arithmetic") {
  RegimeParams p3 = RegimeParams::engineering(3, 6, 1000);
  // s=3: bad iff blue * 16 delta^2 >= |A||B|.
  CHECK(p3.edges_bad(256, 128, 128, 1, 1, 2));
  CHECK_FALSE(p3.edges_bad(255, 128, 128, 1, 1, 2));
  CHECK(p3.bad_mass_budget(448000, 2) ==
        std::pair<std::uint64_t, std::uint64_t>{448000, 16});
  // s=3: removal iff deg * 8 delta >= |S_A|.
  CHECK(p3.prune_cut_hit(128, 1024, 1));
  CHECK_FALSE(p3.prune_cut_hit(127, 1024, 1));
  // s=3: certificate holds iff deg * 4 delta < |T|.
  CHECK(p3.maxdeg_ok(127, 1024, 2));
  CHECK_FALSE(p3.maxdeg_ok(128, 1024, 2));
  CHECK_THROWS_AS(p3.edges_bad(0, 1, 1, 1, 1, 0), std::invalid_argument);

  RegimeParams p4 = RegimeParams::engineering(4, 6, 1000);
  // s=4: threshold |A||B| / (8 delta)^(6-la-lb).
  CHECK(p4.edges_bad(64, 64, 64, 2, 2, 1));
  CHECK_FALSE(p4.edges_bad(63, 64, 64, 2, 2, 1));
  CHECK(p4.edges_bad(1, 64, 64, 1, 1, 1));
  CHECK_FALSE(p4.edges_bad(0, 64, 64, 1, 1, 1));

  RegimeParams p5 = RegimeParams::engineering(5, 6, 1000);
  // general: threshold |A||B| / (4 s^2 delta)^(2s-la-lb); 4*25*1 = 100.
  CHECK(p5.edges_bad(1, 10000, 10000, 3, 3, 1));
  CHECK_FALSE(p5.edges_bad(0, 10000, 10000, 3, 3, 1));
  CHECK(p5.bad_mass_budget(1000, 1) ==
        std::pair<std::uint64_t, std::uint64_t>{1000, 100});
  CHECK(p5.prune_cut_hit(10, 1000, 1));
  CHECK_FALSE(p5.prune_cut_hit(9, 1000, 1));
  CHECK(p5.maxdeg_ok(19, 1000, 1));   // 19 * 50 < 1000
  CHECK_FALSE(p5.maxdeg_ok(20, 1000, 1));

  // Saturation: absurd magnitudes count as over threshold, never wrap.
  CHECK(p4.edges_bad(~std::uint64_t{0}, ~std::uint64_t{0}, ~std::uint64_t{0},
                     1, 1, 1000000));
}

TEST_CASE("diagnostic degree bounds as exact fractions") {
  RegimeParams p = RegimeParams::paper(3, 6, 448000);
  CHECK(p.union_degree_bound(1, 0, 1) ==
        std::pair<std::uint64_t, std::uint64_t>{256, 1});  // 2*4*2^5
  CHECK(p.union_degree_bound(1, 5, 3) ==
        std::pair<std::uint64_t, std::uint64_t>{8, 4});
  CHECK(p.internal_degree_bound(0) ==
        std::pair<std::uint64_t, std::uint64_t>{64, 12});
  CHECK(p.internal_degree_bound(6) ==
        std::pair<std::uint64_t, std::uint64_t>{1, 12});
  CHECK_THROWS_AS(p.internal_degree_bound(7), std::invalid_argument);
  RegimeParams p4 = RegimeParams::engineering(4, 6, 1000);
  CHECK(p4.internal_degree_bound(2) ==
        std::pair<std::uint64_t, std::uint64_t>{16, 6});
}

TEST_CASE("all-red coloring splits into full-size level-1 sets at stage zero") {
  RegimeParams params = RegimeParams::paper(3, 6, 448000);
  Coloring c = Coloring::all_red(params.N);
  FinderOptions opt;
  BuildStats stats;
  FamilyForest forest =
      build_forest(c, params, opt, LeveledSet::Freeness::exact_verified, &stats);
  REQUIRE(forest.validate().empty());
  CHECK(forest.level_ids[0].size() == 1);
  CHECK(forest.level_ids[1].size() == 1750);  // 448000 / 256
  CHECK(forest.set(forest.root_id()).size() == 448000);
  for (int id : forest.level_ids[1]) {
    const LeveledSet& st = forest.set(id);
    CHECK(st.size() == 256);
    CHECK(st.codim() == 0);
    CHECK(st.level == 1);
    CHECK_FALSE(st.exceptional);
    CHECK(st.freeness == LeveledSet::Freeness::exact_verified);
    CHECK(st.parent == forest.root_id());
  }
  CHECK(stats.events.size() == 1750);
  for (const auto& e : stats.events) CHECK(e.stage == 0);

  DegreeReport rep = check_degree_bounds(c, forest, params, 2);
  CHECK(rep.all_pass);
  for (const auto& u : rep.union_checks) CHECK(u.measured == 0);
}

TEST_CASE("finder strategies: greedy red scan on a blue matching") {
  Coloring c = Coloring::blue_matching(64);
  std::vector<Vertex> pool(64);
  std::iota(pool.begin(), pool.end(), 0);
  FinderOptions opt;
  auto got = find_free_subset(c, pool, 2, 16, opt, FinderStrategy::greedy_red);
  REQUIRE(got.has_value());
  CHECK(got->strategy == FinderStrategy::greedy_red);
  CHECK(got->freeness == LeveledSet::Freeness::exact_verified);
  std::vector<Vertex> evens;
  for (Vertex v = 0; v < 16; ++v) evens.push_back(2 * v);
  CHECK(got->vertices == evens);
  CHECK_THROWS_AS(
      find_free_subset(c, pool, 3, 4, opt, FinderStrategy::greedy_red),
      std::invalid_argument);
  CHECK_THROWS_AS(find_free_subset(c, pool, 1, 4, opt), std::invalid_argument);
  CHECK_FALSE(find_free_subset(c, {0, 1, 2}, 2, 4, opt).has_value());
}

TEST_CASE("finder strategies: neighborhood harvest certifies by construction") {
  // Three red blocks of 50, blue across: blue neighborhoods avoid blue K_3.
  Coloring c = Coloring::lower_bound(4, 50);
  std::vector<Vertex> pool(150);
  std::iota(pool.begin(), pool.end(), 0);
  FinderOptions opt;
  auto verified =
      find_free_subset(c, pool, 3, 40, opt, FinderStrategy::neighborhood);
  REQUIRE(verified.has_value());
  CHECK(verified->strategy == FinderStrategy::neighborhood);
  CHECK(verified->freeness == LeveledSet::Freeness::exact_verified);
  std::vector<Vertex> expect;
  for (Vertex v = 50; v < 90; ++v) expect.push_back(v);
  CHECK(verified->vertices == expect);  // first 40 blue neighbors of pivot 0

  // Out of exact budget the answer rides on the pool's own certificate.
  FinderOptions tight;
  tight.clique_cap = 10;
  auto constructed =
      find_free_subset(c, pool, 3, 40, tight, FinderStrategy::neighborhood,
                       LeveledSet::Freeness::exact_verified);
  REQUIRE(constructed.has_value());
  CHECK(constructed->freeness == LeveledSet::Freeness::by_construction);
  auto unknown =
      find_free_subset(c, pool, 3, 40, tight, FinderStrategy::neighborhood,
                       LeveledSet::Freeness::assumed);
  REQUIRE(unknown.has_value());
  CHECK(unknown->freeness == LeveledSet::Freeness::assumed);

  // The failed-pivot memo disables the strategy for the rest of the stage.
  Coloring red = Coloring::all_red(100);
  std::vector<Vertex> rpool(100);
  std::iota(rpool.begin(), rpool.end(), 0);
  FinderOptions few;
  few.pivot_fail_cap = 5;
  FinderState state;
  CHECK_FALSE(find_free_subset(red, rpool, 2, 4, few,
                               FinderStrategy::neighborhood,
                               LeveledSet::Freeness::assumed, &state)
                  .has_value());
  CHECK(state.neighborhood_disabled);
  CHECK(state.failed_pivots == 5);
}

TEST_CASE("finder strategies: pivot walk collects a red block") {
  Coloring c = Coloring::lower_bound(3, 30);  // two red blocks of 30
  std::vector<Vertex> pool(60);
  std::iota(pool.begin(), pool.end(), 0);
  FinderOptions opt;
  auto got = find_free_subset(c, pool, 3, 20, opt, FinderStrategy::walk);
  REQUIRE(got.has_value());
  CHECK(got->vertices.size() == 20);
  CHECK(got->freeness == LeveledSet::Freeness::exact_verified);
  for (size_t i = 0; i < got->vertices.size(); ++i)
    for (size_t j = i + 1; j < got->vertices.size(); ++j)
      CHECK_FALSE(c.blue(got->vertices[i], got->vertices[j]));
}

TEST_CASE("exact finder matches exhaustive enumeration on small pools") {
  std::mt19937_64 rng(31);
  FinderOptions opt;
  int solvable = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Coloring c = Coloring::blue_random(40, 0.5, rng());
    std::vector<Vertex> pool;
    while (pool.size() < 14) {
      Vertex v = rng() % 40;
      if (std::find(pool.begin(), pool.end(), v) == pool.end())
        pool.push_back(v);
    }
    std::sort(pool.begin(), pool.end());
    for (int t : {3, 4})
      for (int m : {4, 6}) {
        auto got = find_free_subset(c, pool, t, m, opt, FinderStrategy::exact);
        bool expect = has_free_subset_naive(c, pool, t, m);
        CHECK(got.has_value() == expect);
        solvable += expect;
        if (got) {
          CHECK(got->vertices.size() == std::size_t(m));
          CHECK(got->freeness == LeveledSet::Freeness::exact_verified);
          CHECK(!find_blue_clique(c, got->vertices, t).clique.has_value());
        }
      }
  }
  CHECK(solvable > 0);
  // Pools above the cap are declined rather than searched.
  FinderOptions small;
  small.exact_pool_cap = 4;
  std::vector<Vertex> pool = {0, 1, 2, 3, 4, 5, 6, 7};
  CHECK_FALSE(find_free_subset(Coloring::all_red(8), pool, 3, 2, small,
                               FinderStrategy::exact)
                  .has_value());
}

TEST_CASE("hostile colorings leave exceptional remainders that pass through") {
  // Every level-1 target is >= 3 vertices, so extraction of a
  // blue-K_3-free set always fails against the complete blue graph.
  Coloring c = all_blue_matrix(16);
  RegimeParams params = RegimeParams::engineering(4, 2, 16, {4, 1}, {2, 2});
  FinderOptions opt;
  BuildStats stats;
  FamilyForest forest =
      build_forest(c, params, opt, LeveledSet::Freeness::assumed, &stats);
  REQUIRE(forest.validate().empty());
  REQUIRE(forest.level_ids[1].size() == 1);
  const LeveledSet& l1 = forest.set(forest.level_ids[1][0]);
  CHECK(l1.exceptional);
  CHECK(l1.size() == 16);
  CHECK(l1.level_codims == std::vector<int>{0});
  CHECK(l1.freeness == LeveledSet::Freeness::assumed);
  // The exceptional parent passes through unchanged one level down.
  REQUIRE(forest.level_ids[2].size() == 1);
  const LeveledSet& l2 = forest.set(forest.level_ids[2][0]);
  CHECK(l2.exceptional);
  CHECK(l2.vertices == l1.vertices);
  CHECK(l2.level_codims == std::vector<int>{0, 0});
  CHECK(l2.parent == l1.id);
  bool saw_exceptional_event = false;
  for (const auto& e : stats.events) saw_exceptional_event |= e.exceptional;
  CHECK(saw_exceptional_event);
}

TEST_CASE("forest validation pinpoints structural defects") {
  FamilyForest f;
  f.s = 3;
  f.n = 2;
  f.level_ids.resize(2);
  LeveledSet root;
  root.level = 0;
  root.parent = -1;
  root.vertices = {0, 1, 2, 3, 4, 5, 6, 7};
  int rid = f.add_set(root);
  CHECK(f.validate().empty());
  CHECK(f.root_id() == rid);

  LeveledSet child;
  child.level = 1;
  child.parent = rid;
  child.level_codims = {1};
  child.vertices = {0, 1, 9};  // 9 is not in the parent
  f.add_set(child);
  CHECK(f.validate() == "child vertices outside parent");
  f.sets[1].vertices = {0, 1, 2};
  CHECK(f.validate().empty());

  LeveledSet overlap;
  overlap.level = 1;
  overlap.parent = rid;
  overlap.level_codims = {1};
  overlap.vertices = {2, 3};
  f.add_set(overlap);
  CHECK(f.validate() == "sibling sets overlap");
  f.sets[2].vertices = {3, 4};
  CHECK(f.validate().empty());

  f.sets[2].level_codims = {-1};
  CHECK(f.validate() == "negative relative codimension");
  f.sets[2].level_codims = {1, 1};
  CHECK(f.validate() == "level_codims length differs from level");
  f.sets[2].level_codims = {1};
  f.sets[2].exceptional = true;
  CHECK(f.validate() == "exceptional set with nonzero relative codimension");
  f.sets[2].level_codims = {0};
  CHECK(f.validate() == "exceptional set smaller than half its parent");
  f.sets[2].exceptional = false;
  f.sets[2].level_codims = {1};
  f.sets[2].vertices = {4, 3};
  CHECK(f.validate() == "unsorted vertex list");
}
