#include "qramsey/cubes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace qramsey {

static void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

SpecialCube SpecialCube::whole(int n) { return make(n, 0, 0); }

SpecialCube SpecialCube::make(int n, int codim, std::uint64_t prefix) {
  require(n >= 0 && n <= 32, "cube: n out of range");
  require(codim >= 0 && codim <= n, "cube: codim out of range");
  require(codim == 64 || prefix < (std::uint64_t{1} << codim),
          "cube: prefix wider than codim");
  return SpecialCube{n, codim, prefix};
}

SpecialCube SpecialCube::around(int n, int codim, Vertex v) {
  require(n >= 0 && n <= 32 && codim >= 0 && codim <= n, "cube: bad around()");
  require(std::uint64_t{v} < (std::uint64_t{1} << n), "cube: vertex out of range");
  return SpecialCube{n, codim, std::uint64_t{v} >> (n - codim)};
}

const char* to_string(CubeRelation r) {
  switch (r) {
    case CubeRelation::nested: return "nested";
    case CubeRelation::adjacent: return "adjacent";
    case CubeRelation::nonadjacent: return "nonadjacent";
  }
  return "?";
}

bool contains(const SpecialCube& outer, const SpecialCube& inner) {
  require(outer.n == inner.n, "contains: dimension mismatch");
  if (inner.codim < outer.codim) return false;
  return (inner.prefix >> (inner.codim - outer.codim)) == outer.prefix;
}

CubeRelation relation(const SpecialCube& a, const SpecialCube& b) {
  require(a.n == b.n, "relation: dimension mismatch");
  require(!(a == b), "relation: cubes are equal");
  if (contains(a, b) || contains(b, a)) return CubeRelation::nested;
  int d = std::min(a.codim, b.codim);
  std::uint64_t pa = a.prefix >> (a.codim - d);
  std::uint64_t pb = b.prefix >> (b.codim - d);
  return std::popcount(pa ^ pb) == 1 ? CubeRelation::adjacent
                                     : CubeRelation::nonadjacent;
}

std::string format_cube(const SpecialCube& c) {
  std::string out;
  out.reserve(c.n);
  for (int i = 0; i < c.codim; ++i)
    out.push_back((c.prefix >> (c.codim - 1 - i)) & 1 ? '1' : '0');
  out.append(c.n - c.codim, '*');
  return out;
}

SpecialCube parse_cube(const std::string& text) {
  int n = static_cast<int>(text.size());
  int codim = 0;
  std::uint64_t prefix = 0;
  bool in_stars = false;
  for (char ch : text) {
    if (ch == '*') {
      in_stars = true;
    } else if (ch == '0' || ch == '1') {
      require(!in_stars, "parse_cube: fixed coordinate after '*'");
      prefix = (prefix << 1) | std::uint64_t(ch == '1');
      ++codim;
    } else {
      throw std::invalid_argument("parse_cube: bad character");
    }
  }
  return SpecialCube::make(n, codim, prefix);
}

std::vector<Vertex> cube_vertices(const SpecialCube& c) {
  std::vector<Vertex> out;
  out.reserve(c.size());
  for (std::uint64_t v = c.lo(); v < c.hi(); ++v)
    out.push_back(static_cast<Vertex>(v));
  return out;
}

int LeveledCube::level_codim(int r) const {
  if (r < 1 || r > level) throw std::out_of_range("level_codim: bad level");
  return level_codims[r - 1];
}

int LeveledCube::ancestor_codim(int r) const {
  if (r < 0 || r > level) throw std::out_of_range("ancestor_codim: bad level");
  return std::accumulate(level_codims.begin(), level_codims.begin() + r, 0);
}

SpecialCube LeveledCube::ancestor(int r) const {
  int d = ancestor_codim(r);
  return SpecialCube::make(cube.n, d, cube.prefix >> (cube.codim - d));
}

bool well_formed(const LeveledCube& c) {
  if (static_cast<int>(c.level_codims.size()) != c.level) return false;
  int sum = 0;
  for (int d : c.level_codims) {
    if (d < 0) return false;
    sum += d;
  }
  return sum == c.cube.codim;
}

int level_of_adjacency(const LeveledCube& a, const LeveledCube& b) {
  require(well_formed(a) && well_formed(b), "level_of_adjacency: malformed cube");
  int top = std::min(a.level, b.level);
  for (int r = 1; r <= top; ++r) {
    SpecialCube pa = a.ancestor(r);
    SpecialCube pb = b.ancestor(r);
    if (pa == pb) continue;
    require(!contains(pa, pb) && !contains(pb, pa),
            "level_of_adjacency: cubes nested at the compared levels");
    return r;
  }
  throw std::invalid_argument("level_of_adjacency: cubes nested through shared ancestors");
}

int dominating_parameter(const LeveledCube& a, const LeveledCube& b, int rho) {
  require(rho >= 1 && rho <= std::min(a.level, b.level),
          "dominating_parameter: rho out of range");
  return std::max(a.level_codim(rho), b.level_codim(rho));
}

std::uint64_t MultiTiling::cube_count() const {
  std::uint64_t total = 0;
  for (const auto& lv : levels) total += lv.size();
  return total;
}

CubeId MultiTiling::insert(const LeveledCube& c) {
  require(c.cube.n == n, "tiling insert: dimension mismatch");
  require(c.level >= 0 && c.level < s - 1, "tiling insert: level out of range");
  require(well_formed(c), "tiling insert: malformed leveled cube");
  if (!insertion_log.empty())
    require(c.cube.codim >= insertion_log.back().codim,
            "tiling insert: codimension decreased");
  CubeId id{c.level, static_cast<int>(levels[c.level].size())};
  levels[c.level].push_back(c);
  insertion_log.push_back({id, c.cube.codim});
  return id;
}

CubeId MultiTiling::covering_cube(int level, Vertex v) const {
  const auto& lv = levels.at(level);
  for (int i = 0; i < static_cast<int>(lv.size()); ++i)
    if (lv[i].cube.contains_vertex(v)) return CubeId{level, i};
  return CubeId{level, -1};
}

std::vector<CubeId> MultiTiling::adjacent_cubes(const LeveledCube& c,
                                                int max_codim) const {
  std::vector<CubeId> out;
  for (int l = 0; l < static_cast<int>(levels.size()); ++l) {
    for (int i = 0; i < static_cast<int>(levels[l].size()); ++i) {
      const SpecialCube& other = levels[l][i].cube;
      if (other.codim > max_codim) continue;
      if (other == c.cube) continue;  // itself, or the same footprint at
                                      // another level: nested, not adjacent
      if (relation(c.cube, other) == CubeRelation::adjacent)
        out.push_back(CubeId{l, i});
    }
  }
  return out;
}

bool MultiTiling::level_complete(int level) const {
  std::uint64_t mass = 0;
  const auto& lv = levels.at(level);
  for (const auto& c : lv) mass += c.cube.size();
  if (mass != (std::uint64_t{1} << n)) return false;
  // Disjointness makes equal mass equivalent to a partition.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> iv;
  iv.reserve(lv.size());
  for (const auto& c : lv) iv.emplace_back(c.cube.lo(), c.cube.hi());
  std::sort(iv.begin(), iv.end());
  for (size_t i = 1; i < iv.size(); ++i)
    if (iv[i].first < iv[i - 1].second) return false;
  return true;
}

std::string MultiTiling::validate() const {
  for (int l = 0; l < static_cast<int>(levels.size()); ++l) {
    for (int i = 0; i < static_cast<int>(levels[l].size()); ++i) {
      const LeveledCube& c = levels[l][i];
      if (c.level != l) return "cube stored at wrong level";
      if (c.cube.n != n) return "cube with wrong ambient dimension";
      if (!well_formed(c)) return "malformed leveled cube";
      for (int j = i + 1; j < static_cast<int>(levels[l].size()); ++j) {
        const SpecialCube& o = levels[l][j].cube;
        if (c.cube == o || contains(c.cube, o) || contains(o, c.cube))
          return "overlapping cubes within one level";
      }
      if (l > 0) {
        // The declared ancestor must be present at the previous level.
        SpecialCube parent = c.ancestor(l - 1);
        bool found = false;
        for (const auto& p : levels[l - 1])
          if (p.cube == parent) { found = true; break; }
        if (!found) return "cube without its level ancestor";
      }
    }
  }
  std::uint64_t logged = insertion_log.size();
  if (logged != cube_count()) return "insertion log out of sync";
  int last = 0;
  for (const auto& e : insertion_log) {
    if (e.id.level < 0 || e.id.level >= static_cast<int>(levels.size()) ||
        e.id.index < 0 ||
        e.id.index >= static_cast<int>(levels[e.id.level].size()))
      return "insertion log references missing cube";
    if (at(e.id).cube.codim != e.codim) return "insertion log codim mismatch";
    if (e.codim < last) return "insertion codimensions decrease";
    last = e.codim;
  }
  return "";
}

}  // namespace qramsey
