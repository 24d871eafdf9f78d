#include "qramsey/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace qramsey {

mpz_class stirling2(int t, int k) {
  if (k < 0 || t < 0 || k > t || t > 20)
    throw std::out_of_range("stirling2: need 0 <= k <= t <= 20");
  // S(t,k) = k*S(t-1,k) + S(t-1,k-1), S(0,0) = 1.
  std::vector<mpz_class> row(t + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= t; ++i) {
    for (int j = std::min(i, t); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;  // S(i, 0) = 0 once i >= 1
  }
  return row[k];
}

mpz_class falling_factorial(const mpz_class& x, int t) {
  mpz_class r = 1;
  for (int i = 0; i < t; ++i) r *= x - i;
  return r;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class labelled_partitions(int s) {
  mpz_class total = 0, fact = 1;
  for (int k = 0; k <= s; ++k) {
    if (k > 0) fact *= k;
    total += fact * stirling2(s, k);
  }
  return total;
}

namespace {

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

SeriesBounds series_bounds(int s, int truncation) {
  if (s < 1 || s > 20)
    throw std::out_of_range("series_bounds: need 1 <= s <= 20");
  if (truncation < 16)
    throw std::out_of_range("series_bounds: truncation too small");
  SeriesBounds b;
  b.s = s;
  b.truncation = truncation;

  b.stirling_route = 2 * labelled_partitions(s);

  b.double_sum_route = 0;
  for (int k = 0; k <= s; ++k)
    for (int j = 0; j <= k; ++j) {
      mpz_class term = binomial(k, j) * pow_ui(mpz_class(j), s);
      if ((k - j) % 2 == 1) term = -term;
      b.double_sum_route += term;
    }
  b.double_sum_route *= 2;

  // Partial sum over i <= M, scaled by 2^M: A = sum i^s * 2^(M-i).  The
  // full sum X satisfies A/2^M < X <= A/2^M + tail with tail < 1, so X is
  // the next integer up.
  int m = truncation;
  mpz_class scaled = 0;
  for (int i = 1; i <= m; ++i)
    scaled += pow_ui(mpz_class(i), s) << (m - i);
  b.partial_sum_route = (scaled >> m) + 1;

  // Tail certificates, all exact: (M+1)^s <= (4/3)^(M+1), the ratio step
  // ((M+2)/(M+1))^s <= 4/3, and 3*(2/3)^(M+1) < 1.
  bool base_ok = pow_ui(mpz_class(3), m + 1) * pow_ui(mpz_class(m + 1), s) <=
                 pow_ui(mpz_class(4), m + 1);
  bool step_ok =
      3 * pow_ui(mpz_class(m + 2), s) <= 4 * pow_ui(mpz_class(m + 1), s);
  bool sum_ok = pow_ui(mpz_class(2), m + 1) < pow_ui(mpz_class(3), m);
  b.tail_certified = base_ok && step_ok && sum_ok;

  b.routes_agree = b.stirling_route == b.double_sum_route &&
                   b.stirling_route == b.partial_sum_route;
  b.power_bound = 2 * pow_ui(mpz_class(s), s);
  b.within_power_bound = b.stirling_route <= b.power_bound;
  return b;
}

int SmallGraph::edge_count() const {
  int total = 0;
  for (int v = 0; v < order; ++v) total += std::popcount(adj[v]);
  return total / 2;
}

int SmallGraph::degree(int v) const { return std::popcount(adj[v]); }

SmallGraph SmallGraph::clique(int t) {
  SmallGraph g(t);
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
  return g;
}

SmallGraph SmallGraph::cube(int n) {
  if (n < 0 || n > 3) throw std::out_of_range("SmallGraph::cube: n <= 3");
  SmallGraph g(1 << n);
  for (int x = 0; x < (1 << n); ++x)
    for (int b = 0; b < n; ++b)
      if (x < (x ^ (1 << b))) g.add_edge(x, x ^ (1 << b));
  return g;
}

namespace {

bool mask_has_clique(const std::uint32_t* adj, int n, int t,
                     std::uint32_t candidates, int have) {
  if (have == t) return true;
  if (have + std::popcount(candidates) < t) return false;
  std::uint32_t rest = candidates;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    // restrict to vertices above v so each clique is enumerated once
    if (mask_has_clique(adj, n, t, candidates & adj[v] & ~((std::uint32_t{2} << v) - 1),
                        have + 1))
      return true;
  }
  return false;
}

bool has_clique(const std::uint32_t* adj, int n, int t) {
  if (t <= 0) return true;
  if (t == 1) return n >= 1;
  return mask_has_clique(adj, n, t, (std::uint32_t{1} << n) - 1, 0);
}

// Red C_4: some pair of vertices with two common red neighbors.
bool has_red_c4(const std::uint32_t* red, int n) {
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::uint32_t common =
          red[u] & red[v] & ~(std::uint32_t{1} << u) & ~(std::uint32_t{1} << v);
      if (std::popcount(common) >= 2) return true;
    }
  return false;
}

bool is_c4(const SmallGraph& g) {
  if (g.order != 4 || g.edge_count() != 4) return false;
  for (int v = 0; v < 4; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool embed_pattern(const SmallGraph& pattern, const std::uint32_t* red, int n,
                   int next, std::uint32_t used, int* image) {
  if (next == pattern.order) return true;
  for (int h = 0; h < n; ++h) {
    if ((used >> h) & 1) continue;
    bool ok = true;
    for (int j = 0; j < next && ok; ++j)
      if (pattern.has_edge(next, j) && !((red[h] >> image[j]) & 1)) ok = false;
    if (!ok) continue;
    image[next] = h;
    if (embed_pattern(pattern, red, n, next + 1, used | (std::uint32_t{1} << h),
                      image))
      return true;
  }
  return false;
}

bool contains_red_pattern(const SmallGraph& pattern, const std::uint32_t* red,
                          int n) {
  if (pattern.order > n) return false;
  if (pattern.order == 2 && pattern.edge_count() == 1) {
    for (int v = 0; v < n; ++v)
      if (red[v]) return true;
    return false;
  }
  if (is_c4(pattern)) return has_red_c4(red, n);
  int image[8];
  return embed_pattern(pattern, red, n, 0, 0, image);
}

}  // namespace

ArrowResult brute_force_arrow(const SmallGraph& pattern, int s, int N) {
  if (N < 1 || N > 8)
    throw std::out_of_range("brute_force_arrow: need 1 <= N <= 8");
  if (s < 2) throw std::out_of_range("brute_force_arrow: need s >= 2");
  if (pattern.order < 1 || pattern.order > 8)
    throw std::out_of_range("brute_force_arrow: pattern order out of range");

  ArrowResult res;
  // Free edges live among vertices 1..N-1; vertex 0's blue neighborhood is
  // normalized to a prefix {1..k}, which covers every coloring up to
  // relabeling.
  std::vector<std::pair<int, int>> free_edges;
  for (int u = 1; u < N; ++u)
    for (int v = u + 1; v < N; ++v) free_edges.push_back({u, v});
  std::uint64_t free_count = free_edges.size();

  std::uint32_t full = (std::uint32_t{1} << N) - 1;
  for (int k = 0; k < N; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_count);
         ++mask) {
      std::uint32_t blue[8] = {0};
      for (int v = 1; v <= k; ++v) {
        blue[0] |= std::uint32_t{1} << v;
        blue[v] |= std::uint32_t{1};
      }
      for (std::uint64_t e = 0; e < free_count; ++e)
        if ((mask >> e) & 1) {
          auto [u, v] = free_edges[e];
          blue[u] |= std::uint32_t{1} << v;
          blue[v] |= std::uint32_t{1} << u;
        }
      std::uint32_t red[8];
      for (int v = 0; v < N; ++v)
        red[v] = full & ~blue[v] & ~(std::uint32_t{1} << v);
      ++res.colorings_checked;
      if (has_clique(blue, N, s)) continue;
      if (contains_red_pattern(pattern, red, N)) continue;
      res.arrows = false;
      res.witness_blue.emplace();
      res.witness_red.emplace();
      for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v)
          ((blue[u] >> v) & 1 ? *res.witness_blue : *res.witness_red)
              .push_back({u, v});
      return res;
    }
  }
  res.arrows = true;
  return res;
}

std::optional<int> brute_force_ramsey(const SmallGraph& pattern, int s,
                                      int max_n) {
  for (int n = 1; n <= max_n; ++n)
    if (brute_force_arrow(pattern, s, n).arrows) return n;
  return std::nullopt;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent, size;
  explicit UnionFind(std::uint64_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace

LowerBoundCertificate lower_bound_certificate(int s, int n) {
  if (s < 3 || s > 6 || n < 1 || n > 10)
    throw std::out_of_range(
        "lower_bound_certificate: need 3 <= s <= 6, 1 <= n <= 10");
  LowerBoundCertificate cert;
  cert.s = s;
  cert.n = n;
  cert.block = (std::uint64_t{1} << n) - 1;
  cert.N = static_cast<std::uint64_t>(s - 1) * cert.block;
  cert.blue_parts = s - 1;

  Coloring c = Coloring::lower_bound(s, cert.block);
  if (c.N != cert.N)
    throw std::logic_error("lower_bound_certificate: oracle size mismatch");

  cert.structure_ok = true;
  UnionFind uf(cert.N);
  for (std::uint64_t u = 0; u < cert.N && cert.structure_ok; ++u)
    for (std::uint64_t v = u + 1; v < cert.N; ++v) {
      bool same_block = u / cert.block == v / cert.block;
      Color got = c.color(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (got != (same_block ? Color::red : Color::blue)) {
        cert.structure_ok = false;
        cert.note = "color mismatch at pair (" + std::to_string(u) + ", " +
                    std::to_string(v) + ")";
        break;
      }
      if (got == Color::red)
        uf.unite(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
  if (!cert.structure_ok) return cert;

  for (std::uint64_t v = 0; v < cert.N; ++v)
    cert.max_red_component = std::max(
        cert.max_red_component,
        std::uint64_t{uf.size[uf.find(static_cast<std::uint32_t>(v))]});
  cert.no_red_cube = cert.max_red_component < (std::uint64_t{1} << n);
  // Blue edges run only across blocks, so any blue clique takes at most one
  // vertex per block: s vertices will not fit into s-1 blocks.
  cert.no_blue_clique = true;
  cert.ok = cert.no_red_cube && cert.no_blue_clique;
  cert.note = "red components are " + std::to_string(s - 1) + " blocks of " +
              std::to_string(cert.block) + " < 2^" + std::to_string(n) +
              "; blue graph is complete " + std::to_string(s - 1) +
              "-partite, no K_" + std::to_string(s);
  return cert;
}

}  // namespace qramsey
