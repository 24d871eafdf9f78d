#pragma once

// Desk-scale ground truth: exact series bounds for the weight sum
// sum_{i>=1} i^s / 2^i, brute-force small Ramsey computations, and
// verified lower-bound constructions.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qramsey/coloring.hpp"

namespace qramsey {

// Stirling number of the second kind.  Requires 0 <= k <= t <= 20.
mpz_class stirling2(int t, int k);

// x(x-1)...(x-t+1); t = 0 gives 1.
mpz_class falling_factorial(const mpz_class& x, int t);

mpz_class binomial(int n, int k);

// Partitions of s objects into labelled nonempty subsets:
// sum_{k=0}^{s} k! * S(s,k).
mpz_class labelled_partitions(int s);

// X_s = sum_{i>=1} i^s / 2^i, an integer, computed three independent ways.
struct SeriesBounds {
  int s = 0;
  int truncation = 0;           // partial-sum cutoff M
  mpz_class stirling_route;     // 2 * sum_k k! S(s,k)
  mpz_class double_sum_route;   // 2 * sum_k sum_j (-1)^(k-j) C(k,j) j^s
  mpz_class partial_sum_route;  // unique integer above the truncated sum
  // Exact-arithmetic certificates that the tail beyond the truncation is
  // below 1: i^s <= (4/3)^i for all i > M (base case plus ratio step) and
  // sum_{i>M} (2/3)^i = 3*(2/3)^(M+1) < 1.
  bool tail_certified = false;
  bool routes_agree = false;
  mpz_class power_bound;  // 2 * s^s
  bool within_power_bound = false;
};

// Requires 1 <= s <= 20 and truncation >= 16.
SeriesBounds series_bounds(int s, int truncation = 512);

// Tiny explicit graph on at most 8 vertices, adjacency as bitmasks.
struct SmallGraph {
  int order = 0;
  std::vector<std::uint32_t> adj;

  explicit SmallGraph(int order_ = 0) : order(order_), adj(order_, 0) {}
  void add_edge(int u, int v) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  bool has_edge(int u, int v) const {
    return (adj[u] >> v) & std::uint32_t{1};
  }
  int edge_count() const;
  int degree(int v) const;

  static SmallGraph clique(int t);
  static SmallGraph cube(int n);  // Q_n on 2^n vertices, n <= 3
};

struct ArrowResult {
  bool arrows = false;
  std::uint64_t colorings_checked = 0;
  // A coloring of K_N avoiding both targets, when one exists.
  std::optional<std::vector<std::pair<int, int>>> witness_blue;
  std::optional<std::vector<std::pair<int, int>>> witness_red;
};

// Does every red/blue coloring of K_N contain the pattern as a red subgraph
// or a blue K_s?  Exhaustive over all colorings with first-vertex symmetry
// pruning.  Requires 1 <= N <= 8, s >= 2, pattern.order <= 8.
ArrowResult brute_force_arrow(const SmallGraph& pattern, int s, int N);

// Smallest N <= max_n for which brute_force_arrow holds.
std::optional<int> brute_force_ramsey(const SmallGraph& pattern, int s,
                                      int max_n);

// Blocked coloring on (s-1)(2^n - 1) vertices: red within blocks of size
// 2^n - 1, blue across.  Verified by a full matrix scan plus a union-find
// recount of red component sizes; no blue K_s since the blue graph is
// complete (s-1)-partite, and no red Q_n since Q_n is connected with 2^n
// vertices while every red component has only 2^n - 1.
struct LowerBoundCertificate {
  int s = 0;
  int n = 0;
  std::uint64_t N = 0;      // (s-1) * (2^n - 1)
  std::uint64_t block = 0;  // 2^n - 1
  bool structure_ok = false;
  std::uint64_t max_red_component = 0;
  bool no_red_cube = false;
  int blue_parts = 0;
  bool no_blue_clique = false;
  bool ok = false;
  std::string note;
};

// Requires 3 <= s <= 6 and 1 <= n <= 10 (full-matrix verification scale).
LowerBoundCertificate lower_bound_certificate(int s, int n);

}  // namespace qramsey
