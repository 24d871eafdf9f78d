#include "qramsey/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qramsey {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

static void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

static std::uint64_t prob_to_bits(double p) {
  require(p >= 0.0 && p <= 1.0, "coloring: probability out of [0,1]");
  if (p >= 1.0) return ~std::uint64_t{0};
  long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
  return static_cast<std::uint64_t>(scaled);
}

// Keyed mix of the unordered pair; u < v assumed by callers below.
static std::uint64_t pair_hash(std::uint64_t seed, Vertex u, Vertex v) {
  return mix64(seed ^ mix64((std::uint64_t{u} << 32) | v));
}

Coloring Coloring::all_red(std::uint64_t N) {
  Coloring c;
  c.kind = Kind::all_red;
  c.N = N;
  return c;
}

Coloring Coloring::blue_random(std::uint64_t N, double p, std::uint64_t seed) {
  Coloring c;
  c.kind = Kind::blue_random;
  c.N = N;
  c.p = p;
  c.seed = seed;
  c.p_bits = prob_to_bits(p);
  return c;
}

Coloring Coloring::blue_multipartite(std::uint64_t N, int parts, double p,
                                     std::uint64_t seed) {
  require(parts >= 2, "blue_multipartite: needs at least 2 parts");
  Coloring c;
  c.kind = Kind::blue_multipartite;
  c.N = N;
  c.parts = parts;
  c.p = p;
  c.seed = seed;
  c.p_bits = prob_to_bits(p);
  return c;
}

Coloring Coloring::blue_matching(std::uint64_t N) {
  Coloring c;
  c.kind = Kind::blue_matching;
  c.N = N;
  return c;
}

Coloring Coloring::lower_bound(int s, std::uint64_t m) {
  require(s >= 3 && m >= 1, "lower_bound: needs s >= 3, m >= 1");
  Coloring c;
  c.kind = Kind::lower_bound;
  c.N = std::uint64_t(s - 1) * m;
  c.block = m;
  return c;
}

Coloring Coloring::explicit_matrix(std::uint64_t N) {
  require(N <= 20000, "explicit_matrix: N exceeds storage cap");
  Coloring c;
  c.kind = Kind::explicit_matrix;
  c.N = N;
  // Unpadded upper-triangle bitstream packed into u64 words; the padded
  // on-disk layout is converted by the matrix file reader/writer.
  std::uint64_t pair_count = N < 2 ? 0 : N * (N - 1) / 2;
  c.bits.assign((pair_count + 63) / 64, 0);
  return c;
}

std::uint64_t Coloring::pair_bit(Vertex u, Vertex v) const {
  // Row u starts after rows 0..u-1, which hold (N-1) + ... + (N-u) pairs.
  std::uint64_t row_start = std::uint64_t{u} * (N - 1) - std::uint64_t{u} * (u - 1) / 2;
  return row_start + (v - u - 1);
}

void Coloring::set_color(Vertex u, Vertex v, Color col) {
  require(kind == Kind::explicit_matrix, "set_color: not an explicit matrix");
  require(u != v && u < N && v < N, "set_color: bad pair");
  if (u > v) std::swap(u, v);
  std::uint64_t b = pair_bit(u, v);
  std::uint64_t mask = std::uint64_t{1} << (b % 64);
  if (col == Color::blue)
    bits[b / 64] |= mask;
  else
    bits[b / 64] &= ~mask;
}

Color Coloring::color(Vertex u, Vertex v) const {
  require(u != v && u < N && v < N, "color: bad pair");
  if (u > v) std::swap(u, v);
  switch (kind) {
    case Kind::all_red:
      return Color::red;
    case Kind::blue_random:
      return pair_hash(seed, u, v) < p_bits ? Color::blue : Color::red;
    case Kind::blue_multipartite:
      if (u % parts == v % parts) return Color::red;
      return pair_hash(seed, u, v) < p_bits ? Color::blue : Color::red;
    case Kind::blue_matching:
      return (u ^ 1) == v ? Color::blue : Color::red;
    case Kind::lower_bound:
      return u / block == v / block ? Color::red : Color::blue;
    case Kind::explicit_matrix: {
      std::uint64_t b = pair_bit(u, v);
      return (bits[b / 64] >> (b % 64)) & 1 ? Color::blue : Color::red;
    }
  }
  throw std::logic_error("color: unknown kind");
}

std::uint64_t blue_degree(const Coloring& c, Vertex v,
                          const std::vector<Vertex>& X) {
  std::uint64_t deg = 0;
  for (Vertex u : X)
    if (u != v && c.blue(u, v)) ++deg;
  return deg;
}

std::uint64_t count_blue_edges(const Coloring& c, const std::vector<Vertex>& A,
                               const std::vector<Vertex>& B, int thread_count) {
  require(std::is_sorted(A.begin(), A.end()) &&
              std::is_sorted(B.begin(), B.end()),
          "count_blue_edges: inputs must be sorted");
  {  // disjointness by merge scan
    auto a = A.begin();
    auto b = B.begin();
    while (a != A.end() && b != B.end()) {
      if (*a == *b) throw std::invalid_argument("count_blue_edges: sets overlap");
      if (*a < *b) ++a; else ++b;
    }
  }
  auto count_rows = [&](std::size_t lo, std::size_t hi) {
    std::uint64_t sum = 0;
    for (std::size_t i = lo; i < hi; ++i)
      for (Vertex u : B)
        if (c.blue(A[i], u)) ++sum;
    return sum;
  };
  if (thread_count <= 1 || A.size() * B.size() < 1u << 20 || A.size() < 2)
    return count_rows(0, A.size());
  // Fixed chunking: partial sums per chunk, combined in chunk order.
  std::size_t chunks = std::min<std::size_t>(thread_count, A.size());
  std::vector<std::uint64_t> partial(chunks, 0);
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < chunks; ++k) {
    std::size_t lo = A.size() * k / chunks;
    std::size_t hi = A.size() * (k + 1) / chunks;
    pool.emplace_back([&, k, lo, hi] { partial[k] = count_rows(lo, hi); });
  }
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (std::uint64_t s : partial) total += s;
  return total;
}

namespace {

// Branch-and-bound blue clique search over <= 64*W local indices.
struct CliqueCtx {
  int t;
  std::size_t m;
  std::size_t words;
  std::vector<std::uint64_t> adj;  // m rows of `words` words
  std::vector<int> stack;

  bool extend(std::vector<std::uint64_t>& cand, int from, int depth) {
    if (depth == t) return true;
    // Count remaining candidates for the depth prune.
    std::uint64_t remain = 0;
    for (std::size_t w = 0; w < words; ++w) remain += std::popcount(cand[w]);
    if (static_cast<int>(remain) + depth < t) return false;
    for (std::size_t w = from / 64; w < words; ++w) {
      std::uint64_t bitsw = cand[w];
      if (w == std::size_t(from / 64)) bitsw &= ~((std::uint64_t{1} << (from % 64)) - 1);
      while (bitsw) {
        int b = std::countr_zero(bitsw);
        bitsw &= bitsw - 1;
        int v = static_cast<int>(w * 64 + b);
        std::vector<std::uint64_t> next(words);
        for (std::size_t x = 0; x < words; ++x)
          next[x] = cand[x] & adj[v * words + x];
        // Only candidates above v keep the enumeration canonical.
        std::size_t vw = v / 64;
        for (std::size_t x = 0; x < vw; ++x) next[x] = 0;
        next[vw] &= ~((std::uint64_t{2} << (v % 64)) - 1);
        stack.push_back(v);
        if (extend(next, v + 1, depth + 1)) return true;
        stack.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

CliqueSearch find_blue_clique(const Coloring& c, const std::vector<Vertex>& S,
                              int t, std::size_t cap) {
  require(t >= 2, "find_blue_clique: t < 2");
  std::vector<Vertex> pool;
  bool exact = S.size() <= cap;
  if (exact) {
    pool = S;
  } else {
    // Deterministic stride subsample of exactly <= cap vertices.
    std::size_t stride = (S.size() + cap - 1) / cap;
    for (std::size_t i = 0; i < S.size(); i += stride) pool.push_back(S[i]);
  }
  std::size_t m = pool.size();
  CliqueCtx ctx;
  ctx.t = t;
  ctx.m = m;
  ctx.words = (m + 63) / 64;
  ctx.adj.assign(m * ctx.words, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (c.blue(pool[i], pool[j])) {
        ctx.adj[i * ctx.words + j / 64] |= std::uint64_t{1} << (j % 64);
        ctx.adj[j * ctx.words + i / 64] |= std::uint64_t{1} << (i % 64);
      }
  std::vector<std::uint64_t> all(ctx.words, 0);
  for (std::size_t i = 0; i < m; ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
  CliqueSearch out;
  out.exact = exact;
  if (ctx.extend(all, 0, 0)) {
    std::vector<Vertex> clique;
    for (int idx : ctx.stack) clique.push_back(pool[idx]);
    std::sort(clique.begin(), clique.end());
    out.clique = std::move(clique);
    out.exact = true;  // a found clique is real regardless of sampling
  }
  return out;
}

bool verify_blue_clique_free(const Coloring& c, const std::vector<Vertex>& S,
                             int t, std::size_t cap) {
  if (t == 2) {
    for (std::size_t i = 0; i < S.size(); ++i)
      for (std::size_t j = i + 1; j < S.size(); ++j)
        if (c.blue(S[i], S[j])) return false;
    return true;
  }
  return !find_blue_clique(c, S, t, cap).clique.has_value();
}

CubeCheck verify_red_cube(const Coloring& c, const Embedding& e) {
  CubeCheck out;
  std::uint64_t size = std::uint64_t{1} << e.n;
  if (e.map.size() != size) {
    out.reason = "embedding has wrong domain size";
    return out;
  }
  for (Vertex w : e.map)
    if (w >= c.N) {
      out.reason = "image vertex out of range";
      return out;
    }
  std::vector<Vertex> sorted = e.map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    out.reason = "embedding not injective";
    return out;
  }
  for (std::uint64_t x = 0; x < size; ++x)
    for (int b = 0; b < e.n; ++b) {
      std::uint64_t y = x ^ (std::uint64_t{1} << b);
      if (y < x) continue;
      if (c.color(e.map[x], e.map[y]) != Color::red) {
        out.reason = "cube edge " + std::to_string(x) + "-" + std::to_string(y) +
                     " maps to a blue pair";
        return out;
      }
    }
  out.valid = true;
  return out;
}

}  // namespace qramsey
