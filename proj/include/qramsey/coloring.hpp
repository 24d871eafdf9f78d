#pragma once

// Two-colorings of K_N and the exact queries the pipeline runs against them.
//
// Implicit oracles derive color(u, v) from a keyed mix of the unordered pair,
// so a coloring on ~10^5 vertices needs no storage and every query is
// deterministic, symmetric and independent of evaluation order.  Explicit
// matrices hold the upper triangle as a bitstream for small N.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qramsey/cubes.hpp"

namespace qramsey {

enum class Color : std::uint8_t { red = 0, blue = 1 };

// 64-bit avalanche mix (splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t x);

struct Coloring {
  enum class Kind {
    all_red,
    blue_random,        // each pair blue independently with probability p
    blue_multipartite,  // part(v) = v % parts; cross pairs blue with prob. p
    blue_matching,      // v blue to v^1 only (pairs {0,1},{2,3},...)
    lower_bound,        // blocks of size block; within red, across blue
    explicit_matrix,    // stored upper triangle, bit 1 = blue
  };

  Kind kind = Kind::all_red;
  std::uint64_t N = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  int parts = 0;              // blue_multipartite
  std::uint64_t block = 0;    // lower_bound block size
  std::vector<std::uint64_t> bits;  // explicit_matrix upper triangle

  Color color(Vertex u, Vertex v) const;
  bool blue(Vertex u, Vertex v) const { return color(u, v) == Color::blue; }

  static Coloring all_red(std::uint64_t N);
  static Coloring blue_random(std::uint64_t N, double p, std::uint64_t seed);
  static Coloring blue_multipartite(std::uint64_t N, int parts, double p,
                                    std::uint64_t seed);
  static Coloring blue_matching(std::uint64_t N);
  // (s-1) blocks of size m: N = (s-1)*m, within-block red, cross-block blue.
  static Coloring lower_bound(int s, std::uint64_t m);
  static Coloring explicit_matrix(std::uint64_t N);  // all red, mutable

  // Explicit matrices only.
  void set_color(Vertex u, Vertex v, Color c);

 private:
  std::uint64_t pair_bit(Vertex u, Vertex v) const;
  std::uint64_t p_bits = 0;  // round(p * 2^64)
};

// Number of blue neighbors of v inside X (v excluded if present).
std::uint64_t blue_degree(const Coloring& c, Vertex v,
                          const std::vector<Vertex>& X);

// Exact blue edge count between disjoint vertex sets.  Throws on overlap.
// thread_count > 1 splits A into fixed chunks whose partial sums are
// combined in chunk order, so the result never depends on scheduling.
std::uint64_t count_blue_edges(const Coloring& c, const std::vector<Vertex>& A,
                               const std::vector<Vertex>& B,
                               int thread_count = 1);

struct CliqueSearch {
  std::optional<std::vector<Vertex>> clique;  // ascending vertex ids
  bool exact = false;  // true: absence (if empty) is certified
};

// Searches for a blue K_t inside S.  |S| <= cap runs the exact
// branch-and-bound; larger S falls back to exact search on a deterministic
// subsample of cap vertices, whose empty answer is only
// "unconfirmed-absence" (exact = false).
CliqueSearch find_blue_clique(const Coloring& c, const std::vector<Vertex>& S,
                              int t, std::size_t cap = 2000);

// True iff S spans no blue K_t; exact for t == 2 at any size (all-pairs
// scan), otherwise exact only under the find_blue_clique cap.
bool verify_blue_clique_free(const Coloring& c, const std::vector<Vertex>& S,
                             int t, std::size_t cap = 2000);

// Injective map {0,1}^n -> [N]; map[x] is the host vertex of cube vertex x.
struct Embedding {
  int n = 0;
  std::vector<Vertex> map;
};

struct CubeCheck {
  bool valid = false;
  std::string reason;  // empty when valid
};

// Confirms the embedding is injective and every one of the n*2^(n-1) cube
// edges maps to a red pair.
CubeCheck verify_red_cube(const Coloring& c, const Embedding& e);

}  // namespace qramsey
