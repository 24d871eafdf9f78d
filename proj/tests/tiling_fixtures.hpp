#pragma once

// Random valid multi-tilings for property tests.  Each level refines the
// previous one by recursive prefix splits, and cubes are inserted in
// non-decreasing codimension order so the insertion-log discipline holds.

#include <algorithm>
#include <random>
#include <vector>

#include "qramsey/cubes.hpp"

namespace qramsey::fixtures {

// Randomly split `c` into special subcubes, fixing at most `budget` further
// coordinates.  Every leaf is kept; the union of leaves is exactly `c`.
inline void split_random(std::mt19937_64& rng, const SpecialCube& c,
                         int budget, std::vector<SpecialCube>& out) {
  if (c.codim < c.n && budget > 0 && (rng() & 1)) {
    for (std::uint64_t bit : {std::uint64_t{0}, std::uint64_t{1}}) {
      SpecialCube half =
          SpecialCube::make(c.n, c.codim + 1, (c.prefix << 1) | bit);
      split_random(rng, half, budget - 1, out);
    }
    return;
  }
  out.push_back(c);
}

// A uniform-ish random valid multi-tiling: level 0 is the whole cube, each
// deeper level refines its parent by at most `budget_per_level` extra fixed
// coordinates.
inline MultiTiling random_multi_tiling(std::mt19937_64& rng, int s, int n,
                                       int budget_per_level = 3) {
  std::vector<LeveledCube> cubes;
  cubes.push_back({SpecialCube::whole(n), 0, {}});
  std::vector<LeveledCube> frontier = cubes;
  for (int level = 1; level <= s - 2; ++level) {
    std::vector<LeveledCube> next;
    for (const LeveledCube& parent : frontier) {
      std::vector<SpecialCube> parts;
      split_random(rng, parent.cube, budget_per_level, parts);
      for (const SpecialCube& part : parts) {
        LeveledCube child{part, level, parent.level_codims};
        child.level_codims.push_back(part.codim - parent.cube.codim);
        next.push_back(child);
      }
    }
    cubes.insert(cubes.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::stable_sort(cubes.begin(), cubes.end(),
                   [](const LeveledCube& a, const LeveledCube& b) {
                     if (a.cube.codim != b.cube.codim)
                       return a.cube.codim < b.cube.codim;
                     return a.level < b.level;
                   });
  MultiTiling t(s, n);
  for (const LeveledCube& c : cubes) t.insert(c);
  return t;
}

}  // namespace qramsey::fixtures
