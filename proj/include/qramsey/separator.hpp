#pragma once

// Degeneracy, separator validation, and the recursive two-sided
// decomposition driven by pluggable separator oracles.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qramsey {

struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists, no loops

  explicit SimpleGraph(int n_ = 0) : n(n_), adj(n_) {}
  void add_edge(int u, int v);  // ignores duplicates
  bool has_edge(int u, int v) const;
  std::uint64_t edge_count() const;

  // Subgraph on the given original vertices (ascending); local vertex i
  // corresponds to vertices[i].
  SimpleGraph induced(const std::vector<int>& vertices) const;

  static SimpleGraph grid(int rows, int cols);  // vertex r*cols + c
  static SimpleGraph path(int k);
};

struct DegeneracyResult {
  int degeneracy = 0;
  std::vector<int> order;  // iterated minimum-degree elimination order
};

DegeneracyResult degeneracy(const SimpleGraph& g);

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

// Accepts "a/b", decimals like "0.1", and plain integers.
Fraction parse_fraction(const std::string& text);

struct SeparatorCheck {
  bool ok = false;
  std::uint64_t cut_size = 0;
  std::uint64_t largest_component = 0;
  std::string note;
};

// True iff |cut| <= t and every component of g - cut has at most
// eta * |V(g)| vertices (exact rational comparison).
SeparatorCheck validate_separator(const SimpleGraph& g,
                                  const std::vector<int>& cut, std::uint64_t t,
                                  Fraction eta);

// Given the subgraph induced on `part` (original ids, ascending) returns a
// cut as original ids.  Contract: every component left in part - cut has at
// most 2/3 of |part| vertices.
using SeparatorOracle = std::function<std::vector<int>(
    const SimpleGraph& induced, const std::vector<int>& part)>;

SeparatorOracle tree_centroid_oracle();
SeparatorOracle grid_cut_oracle(int rows, int cols);
// Cuts along a breadth-first layer when that balances, otherwise falls back
// to the boundary of a third of the vertices; no cut-size guarantee.
SeparatorOracle bfs_layer_oracle();

struct Decomposition {
  int depth = 0;
  std::vector<int> separator;           // accumulated cut, sorted
  std::vector<std::vector<int>> parts;  // 2^depth parts, possibly empty
  std::uint64_t t0 = 0;                 // largest single oracle cut
  std::vector<std::uint64_t> round_cuts;  // vertices cut per round
  bool ok = false;
  std::string note;
};

// Applies the oracle within every current part for `depth` rounds, splitting
// each part into two sides of at most 2/3 its size (components of the
// remainder are merged smallest-side-first).  Aborts with ok = false when an
// oracle cut leaves an oversized component.
Decomposition recursive_decompose(const SimpleGraph& g,
                                  const SeparatorOracle& oracle, int depth);

struct DecompositionCheck {
  bool partition_ok = false;
  bool edge_cut_ok = false;        // no edge joins two distinct parts
  bool separator_bound_ok = false; // |T| <= 2^depth * t0
  bool part_bound_ok = false;      // each |U| * 3^depth <= 2^depth * n
  bool ok = false;
  std::string note;
};

DecompositionCheck certify_decomposition(const SimpleGraph& g,
                                         const Decomposition& d);

}  // namespace qramsey
