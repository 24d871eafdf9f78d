#include "qramsey/prune.hpp"

#include <algorithm>
#include <stdexcept>

namespace qramsey {

PruneResult prune(TilingRun& run) {
  PruneResult res;
  const MultiTiling& tiling = run.tiling();
  const RegimeParams& params = run.params();
  const FamilyForest& forest = run.forest();
  const Coloring& oracle = run.oracle();
  if (!run.complete())
    throw std::invalid_argument("prune: tiling run is not complete");
  int top = params.s - 2;
  const auto& cubes = tiling.levels[top];
  res.pruned.resize(cubes.size());

  for (int ci = 0; ci < static_cast<int>(cubes.size()); ++ci) {
    const LeveledCube& c = cubes[ci];
    const LeveledSet& sc = forest.set(run.assignment().set_of[top][ci]);
    std::vector<char> removed(sc.size(), 0);
    for (int ai = 0; ai < static_cast<int>(cubes.size()); ++ai) {
      if (ai == ci) continue;
      const LeveledCube& a = cubes[ai];
      if (a.cube.codim > c.cube.codim) continue;
      if (relation(c.cube, a.cube) != CubeRelation::adjacent) continue;
      const LeveledSet& sa = forest.set(run.assignment().set_of[top][ai]);
      int rho = level_of_adjacency(c, a);
      int delta = dominating_parameter(c, a, rho);
      RemovalEntry entry;
      entry.cube = CubeId{top, ci};
      entry.against = CubeId{top, ai};
      entry.rho = rho;
      entry.delta = delta;
      for (std::size_t vi = 0; vi < sc.vertices.size(); ++vi) {
        std::uint64_t deg = blue_degree(oracle, sc.vertices[vi], sa.vertices);
        if (params.prune_cut_hit(deg, sa.size(), delta)) {
          ++entry.hit;
          removed[vi] = 1;
        }
      }
      res.removals.push_back(entry);
    }
    std::vector<Vertex>& t_c = res.pruned[ci];
    t_c.reserve(sc.size());
    for (std::size_t vi = 0; vi < sc.vertices.size(); ++vi)
      if (!removed[vi]) t_c.push_back(sc.vertices[vi]);
    res.removed_total += sc.size() - t_c.size();
    if (2 * t_c.size() < sc.size()) {
      res.ok = false;
      res.aborted_cube = CubeId{top, ci};
      res.note = "pruned set of cube " + format_cube(c.cube) +
                 " fell below half of its assigned set";
      return res;
    }
  }

  // Max-degree certificate, measured from the higher-codimension side of
  // every adjacent pair (both directions on ties).
  res.certified = true;
  for (int ci = 0; ci < static_cast<int>(cubes.size()); ++ci) {
    for (int ai = 0; ai < static_cast<int>(cubes.size()); ++ai) {
      if (ai == ci) continue;
      const LeveledCube& c = cubes[ci];
      const LeveledCube& a = cubes[ai];
      if (c.cube.codim < a.cube.codim) continue;
      if (relation(c.cube, a.cube) != CubeRelation::adjacent) continue;
      int rho = level_of_adjacency(c, a);
      int delta = dominating_parameter(c, a, rho);
      MaxDegEntry entry;
      entry.from = CubeId{top, ci};
      entry.to = CubeId{top, ai};
      entry.delta = delta;
      entry.target_size = res.pruned[ai].size();
      for (Vertex v : res.pruned[ci])
        entry.max_deg =
            std::max(entry.max_deg, blue_degree(oracle, v, res.pruned[ai]));
      entry.pass = params.maxdeg_ok(entry.max_deg, entry.target_size, delta);
      res.certified = res.certified && entry.pass;
      res.certification.push_back(entry);
    }
  }
  res.ok = true;
  return res;
}

}  // namespace qramsey
