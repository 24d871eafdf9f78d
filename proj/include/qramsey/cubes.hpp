#pragma once

// Special subcubes of the hypercube Q_n and multi-level tilings built from
// them.
//
// A special cube fixes the first `codim` coordinates of Q_n and leaves the
// rest free.  Vertices are indexed by index = sum a_i * 2^(n-i), i.e. the
// first coordinate is the most significant bit.  Under this encoding a
// special cube with prefix value p and codimension d is exactly the index
// interval [p * 2^(n-d), (p+1) * 2^(n-d)), so containment and membership are
// O(1) shifts and lexicographic vertex order coincides with numeric order.

#include <cstdint>
#include <string>
#include <vector>

namespace qramsey {

using Vertex = std::uint32_t;

struct SpecialCube {
  int n = 0;                  // ambient dimension
  int codim = 0;              // number of fixed leading coordinates
  std::uint64_t prefix = 0;   // fixed coordinates, a_1 at the high end

  std::uint64_t size() const { return std::uint64_t{1} << (n - codim); }
  std::uint64_t lo() const { return prefix << (n - codim); }
  std::uint64_t hi() const { return (prefix + 1) << (n - codim); }  // exclusive

  bool contains_vertex(Vertex v) const {
    return (std::uint64_t{v} >> (n - codim)) == prefix;
  }

  bool operator==(const SpecialCube&) const = default;

  static SpecialCube whole(int n);
  // Prefix given as the top `codim` coordinates a_1..a_codim of `bits`.
  static SpecialCube make(int n, int codim, std::uint64_t prefix);
  // Cube spanned by fixing the first `codim` coordinates of vertex v.
  static SpecialCube around(int n, int codim, Vertex v);
};

enum class CubeRelation { nested, adjacent, nonadjacent };

const char* to_string(CubeRelation r);

// True iff inner is a subcube of outer (equality counts).
bool contains(const SpecialCube& outer, const SpecialCube& inner);

// Classification of a pair of distinct special cubes of the same Q_n.
// Intersecting special cubes always nest.  Disjoint cubes are adjacent iff
// their prefixes truncated to the smaller codimension differ in exactly one
// coordinate.  Throws std::invalid_argument on equal cubes or mismatched n.
CubeRelation relation(const SpecialCube& a, const SpecialCube& b);

// Textual form a_1..a_codim followed by '*' for each free coordinate,
// e.g. "01****" for n = 6, codim = 2, prefix 01.
std::string format_cube(const SpecialCube& c);
SpecialCube parse_cube(const std::string& text);

// Vertices of a cube in ascending index order.
std::vector<Vertex> cube_vertices(const SpecialCube& c);

// A cube placed at a tiling level, carrying its per-level codimensions
// d_1..d_level relative to its chain of ancestors.  sum(level_codims) must
// equal cube.codim; the ancestor at level r is the prefix truncation to
// d_1 + ... + d_r fixed coordinates.
struct LeveledCube {
  SpecialCube cube;
  int level = 0;
  std::vector<int> level_codims;

  int level_codim(int r) const;        // d_r, 1 <= r <= level
  int ancestor_codim(int r) const;     // d_1 + ... + d_r, 0 <= r <= level
  SpecialCube ancestor(int r) const;   // prefix truncation, 0 <= r <= level
};

// Checks sum(level_codims) == cube.codim and level_codims.size() == level.
bool well_formed(const LeveledCube& c);

// Smallest r >= 1 whose ancestors differ; defined for adjacent cubes (and,
// more generally, whenever neither min-level ancestor contains the other).
// Throws std::invalid_argument if the cubes are nested at the compared
// levels or either cube is malformed.
int level_of_adjacency(const LeveledCube& a, const LeveledCube& b);

// max(d_rho(a), d_rho(b)); rho must lie in [1, min(level(a), level(b))].
int dominating_parameter(const LeveledCube& a, const LeveledCube& b, int rho);

struct CubeId {
  int level = 0;
  int index = 0;
  bool operator==(const CubeId&) const = default;
  auto operator<=>(const CubeId&) const = default;
};

// Partial or complete multi-level tiling: levels[l] holds the level-l cubes
// in insertion order, the log records global insertion order.  A complete
// (s-1)-fold tiling has levels 0..s-2, each level partitioning {0,1}^n,
// each level refining the previous one.
struct MultiTiling {
  int s = 0;
  int n = 0;
  std::vector<std::vector<LeveledCube>> levels;
  struct LogEntry {
    CubeId id;
    int codim = 0;
  };
  std::vector<LogEntry> insertion_log;

  explicit MultiTiling(int s_ = 0, int n_ = 0)
      : s(s_), n(n_), levels(s_ > 0 ? s_ - 1 : 0) {}

  const LeveledCube& at(CubeId id) const { return levels[id.level][id.index]; }
  std::uint64_t cube_count() const;

  // Appends at its level and logs; enforces well-formedness and the
  // non-decreasing insertion codimension discipline.
  CubeId insert(const LeveledCube& c);

  // Level-l cube whose interval covers v, or index -1 if uncovered.
  CubeId covering_cube(int level, Vertex v) const;

  // Every cube of the tiling adjacent to c with codimension <= max_codim.
  // c may be a member or a candidate cube consistent with the tiling.
  std::vector<CubeId> adjacent_cubes(const LeveledCube& c, int max_codim) const;

  // True iff level l's cubes partition {0,1}^n.
  bool level_complete(int level) const;

  // Structural validation: well-formed cubes, per-level pairwise
  // disjointness, refinement of the previous level, log consistency.
  // Returns an empty string when valid, else a description of the breach.
  std::string validate() const;
};

}  // namespace qramsey
