#include "qramsey/embed.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qramsey {

EmbedResult greedy_embed(const TilingRun& run, const PruneResult& pruned,
                         bool audit_forbidden) {
  EmbedResult res;
  const MultiTiling& tiling = run.tiling();
  const RegimeParams& params = run.params();
  const Coloring& oracle = run.oracle();
  if (!run.complete())
    throw std::invalid_argument("greedy_embed: tiling run is not complete");
  if (!pruned.ok)
    throw std::invalid_argument("greedy_embed: pruning did not complete");
  int top = params.s - 2;
  const auto& cubes = tiling.levels[top];

  std::map<std::pair<int, int>, std::uint64_t> log_pos;
  for (std::uint64_t k = 0; k < tiling.insertion_log.size(); ++k) {
    const auto& e = tiling.insertion_log[k];
    log_pos[{e.id.level, e.id.index}] = k;
  }
  std::vector<int> order(cubes.size());
  for (int i = 0; i < static_cast<int>(cubes.size()); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (cubes[a].cube.codim != cubes[b].cube.codim)
      return cubes[a].cube.codim > cubes[b].cube.codim;
    return log_pos.at({top, a}) > log_pos.at({top, b});
  });
  for (int i : order) res.order.push_back(CubeId{top, i});

  std::uint64_t size = std::uint64_t{1} << params.n;
  res.embedding.n = params.n;
  res.embedding.map.assign(size, 0);
  std::vector<char> defined(size, 0);
  std::vector<char> used(oracle.N, 0);

  for (int ci : order) {
    const LeveledCube& c = cubes[ci];
    const std::vector<Vertex>& t_c = pruned.pruned[ci];
    std::uint64_t cap = std::uint64_t{1} << (params.n - c.cube.codim);
    std::uint64_t occupied = 0;
    for (std::uint64_t x = c.cube.lo(); x < c.cube.hi(); ++x) {
      std::vector<Vertex> internal_imgs, external_imgs;
      for (int b = 0; b < params.n; ++b) {
        std::uint64_t y = x ^ (std::uint64_t{1} << b);
        if (!defined[y]) continue;
        (c.cube.contains_vertex(static_cast<Vertex>(y)) ? internal_imgs
                                                        : external_imgs)
            .push_back(res.embedding.map[y]);
      }
      if (audit_forbidden) {
        ForbiddenAudit audit;
        audit.cube = CubeId{top, ci};
        audit.cube_vertex = static_cast<Vertex>(x);
        audit.t_size = t_c.size();
        audit.occupied = occupied;
        for (Vertex w : t_c) {
          for (Vertex img : external_imgs)
            if (w != img && oracle.blue(w, img)) {
              ++audit.external;
              break;
            }
          for (Vertex img : internal_imgs)
            if (w != img && oracle.blue(w, img)) {
              ++audit.internal;
              break;
            }
        }
        audit.within =
            audit.external * params.external_cap_den() <= audit.t_size &&
            audit.internal * params.internal_cap_den() <= cap &&
            audit.occupied <= cap - 1;
        ++res.audited_steps;
        if (!audit.within) res.violations.push_back(audit);
      }
      bool placed = false;
      for (Vertex w : t_c) {
        if (used[w]) continue;
        bool ok = true;
        for (Vertex img : internal_imgs)
          if (oracle.blue(w, img)) {
            ok = false;
            break;
          }
        if (ok)
          for (Vertex img : external_imgs)
            if (oracle.blue(w, img)) {
              ok = false;
              break;
            }
        if (!ok) continue;
        res.embedding.map[x] = w;
        defined[x] = 1;
        used[w] = 1;
        ++occupied;
        placed = true;
        break;
      }
      if (!placed) {
        res.success = false;
        res.failed_cube = CubeId{top, ci};
        res.failed_vertex = x;
        res.note = "no admissible image in cube " + format_cube(c.cube) +
                   " for vertex " + std::to_string(x) + " (|T| = " +
                   std::to_string(t_c.size()) + ", occupied = " +
                   std::to_string(occupied) + ")";
        return res;
      }
    }
  }
  res.success = true;
  return res;
}

BaselineResult baseline_embed(const Coloring& c, int n) {
  BaselineResult res;
  if (n < 1 || n > 26)
    throw std::invalid_argument("baseline_embed: n out of range");
  std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Vertex> everyone(c.N);
  for (std::uint64_t v = 0; v < c.N; ++v) everyone[v] = static_cast<Vertex>(v);
  for (std::uint64_t v = 0; v < c.N; ++v)
    res.d_max = std::max(res.d_max,
                         blue_degree(c, static_cast<Vertex>(v), everyone));
  if (static_cast<unsigned __int128>(res.d_max) * n + size > c.N) {
    res.refused = true;
    res.refusal = "requires N >= d_max*n + 2^n, measured d_max = " +
                  std::to_string(res.d_max);
    return res;
  }
  res.embedding.n = n;
  res.embedding.map.assign(size, 0);
  std::vector<char> used(c.N, 0);
  for (std::uint64_t x = 0; x < size; ++x) {
    bool placed = false;
    for (std::uint64_t w = 0; w < c.N && !placed; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int b = 0; b < n && ok; ++b) {
        std::uint64_t y = x ^ (std::uint64_t{1} << b);
        if (y < x && c.blue(static_cast<Vertex>(w), res.embedding.map[y]))
          ok = false;
      }
      if (ok) {
        res.embedding.map[x] = static_cast<Vertex>(w);
        used[w] = 1;
        placed = true;
      }
    }
    if (!placed) {
      res.note = "no admissible image for vertex " + std::to_string(x);
      return res;
    }
  }
  res.success = true;
  return res;
}

}  // namespace qramsey
