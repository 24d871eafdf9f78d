#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qramsey/coloring.hpp"

using namespace qramsey;

namespace {

std::vector<Vertex> iota_vertices(Vertex n) {
  std::vector<Vertex> v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Exhaustive blue-clique test by subset enumeration; ground truth for the
// branch-and-bound search on small pools.
bool has_blue_clique_naive(const Coloring& c, const std::vector<Vertex>& S,
                           int t) {
  int m = static_cast<int>(S.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != t) continue;
    bool all_blue = true;
    for (int i = 0; i < m && all_blue; ++i)
      for (int j = i + 1; j < m && all_blue; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !c.blue(S[i], S[j]))
          all_blue = false;
    if (all_blue) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("implicit colorings are deterministic, symmetric, and reject self-pairs") {
  for (const Coloring& c :
       {Coloring::blue_random(500, 0.3, 7), Coloring::blue_multipartite(500, 3, 0.2, 9),
        Coloring::blue_matching(500), Coloring::all_red(500)}) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
      Vertex u = rng() % 500, v = rng() % 500;
      if (u == v) continue;
      CHECK(c.color(u, v) == c.color(v, u));
      CHECK(c.color(u, v) == c.color(u, v));
    }
    CHECK_THROWS_AS(c.color(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(c.color(0, 500), std::invalid_argument);
  }
  // Same seed, same answers; different seed, different coloring somewhere.
  Coloring a = Coloring::blue_random(100, 0.5, 1);
  Coloring b = Coloring::blue_random(100, 0.5, 1);
  Coloring d = Coloring::blue_random(100, 0.5, 2);
  bool any_diff = false;
  for (Vertex u = 0; u < 100; ++u)
    for (Vertex v = u + 1; v < 100; ++v) {
      CHECK(a.color(u, v) == b.color(u, v));
      any_diff |= a.color(u, v) != d.color(u, v);
    }
  CHECK(any_diff);
}

TEST_CASE("structured colorings have the advertised shape") {
  Coloring all = Coloring::all_red(64);
  for (Vertex u = 0; u < 64; ++u)
    for (Vertex v = u + 1; v < 64; ++v) CHECK(all.color(u, v) == Color::red);

  // Perfect matching: v is blue exactly to v^1.
  Coloring match = Coloring::blue_matching(64);
  for (Vertex u = 0; u < 64; ++u)
    for (Vertex v = u + 1; v < 64; ++v)
      CHECK(match.blue(u, v) == ((u ^ 1) == v));

  // Multipartite: within a part everything is red.
  Coloring mp = Coloring::blue_multipartite(300, 4, 0.9, 17);
  bool saw_cross_blue = false;
  for (Vertex u = 0; u < 300; ++u)
    for (Vertex v = u + 1; v < 300; ++v) {
      if (u % 4 == v % 4) CHECK(mp.color(u, v) == Color::red);
      else saw_cross_blue |= mp.blue(u, v);
    }
  CHECK(saw_cross_blue);

  // Lower-bound blocks: s=3, m=3 puts {0,1,2} and {3,4,5} in red blocks.
  Coloring lb = Coloring::lower_bound(3, 3);
  CHECK(lb.N == 6);
  CHECK(lb.color(0, 1) == Color::red);
  CHECK(lb.color(0, 3) == Color::blue);
  CHECK(lb.color(3, 5) == Color::red);
  CHECK(lb.color(2, 3) == Color::blue);
}

TEST_CASE("blue fraction of blue_random tracks p") {
  const std::uint64_t N = 10000;
  Coloring c = Coloring::blue_random(N, 0.25, 99);
  // ~5M pairs sampled via a fixed stride keeps this under a second.
  std::uint64_t blue = 0, total = 0;
  for (Vertex u = 0; u < N; u += 7)
    for (Vertex v = u + 1; v < N; v += 3) {
      total += 1;
      blue += c.blue(u, v);
    }
  double frac = double(blue) / double(total);
  CHECK(std::abs(frac - 0.25) < 0.01);
}

TEST_CASE("explicit matrices store and report exactly what was set") {
  Coloring m = Coloring::explicit_matrix(40);
  std::mt19937_64 rng(3);
  std::set<std::pair<Vertex, Vertex>> blue;
  for (int k = 0; k < 200; ++k) {
    Vertex u = rng() % 40, v = rng() % 40;
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    m.set_color(u, v, Color::blue);
    blue.insert({u, v});
  }
  for (Vertex u = 0; u < 40; ++u)
    for (Vertex v = u + 1; v < 40; ++v)
      CHECK(m.blue(u, v) == blue.count({u, v}));
  // Colors can be overwritten.
  m.set_color(blue.begin()->first, blue.begin()->second, Color::red);
  CHECK_FALSE(m.blue(blue.begin()->first, blue.begin()->second));
  CHECK_THROWS_AS(Coloring::all_red(10).set_color(0, 1, Color::blue),
                  std::logic_error);
}

TEST_CASE("count_blue_edges matches the naive double loop and ignores threads") {
  Coloring c = Coloring::blue_random(2000, 0.4, 21);
  std::vector<Vertex> A, B;
  for (Vertex v = 0; v < 160; ++v) A.push_back(v);
  for (Vertex v = 300; v < 520; ++v) B.push_back(v);
  std::uint64_t naive = 0;
  for (Vertex u : A)
    for (Vertex v : B) naive += c.blue(u, v);
  for (int threads : {1, 2, 8})
    CHECK(count_blue_edges(c, A, B, threads) == naive);
  CHECK_THROWS_AS(count_blue_edges(c, A, A), std::invalid_argument);

  // blue_degree agrees with a row of the same count.
  std::uint64_t deg = blue_degree(c, A[0], B);
  std::uint64_t row = 0;
  for (Vertex v : B) row += c.blue(A[0], v);
  CHECK(deg == row);
  // v itself is skipped when present in X.
  std::vector<Vertex> with_self = {A[0], B[0], B[1]};
  CHECK(blue_degree(c, A[0], with_self) ==
        std::uint64_t(c.blue(A[0], B[0])) + c.blue(A[0], B[1]));
}

TEST_CASE("find_blue_clique agrees with exhaustive subset search") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint64_t seed = rng();
    Coloring c = Coloring::blue_random(64, 0.45, seed);
    std::vector<Vertex> S;
    while (S.size() < 14) {
      Vertex v = rng() % 64;
      if (std::find(S.begin(), S.end(), v) == S.end()) S.push_back(v);
    }
    std::sort(S.begin(), S.end());
    for (int t = 2; t <= 5; ++t) {
      CliqueSearch got = find_blue_clique(c, S, t);
      CHECK(got.exact);
      CHECK(got.clique.has_value() == has_blue_clique_naive(c, S, t));
      if (got.clique) {
        CHECK(got.clique->size() == std::size_t(t));
        CHECK(std::is_sorted(got.clique->begin(), got.clique->end()));
        for (size_t i = 0; i < got.clique->size(); ++i)
          for (size_t j = i + 1; j < got.clique->size(); ++j)
            CHECK(c.blue((*got.clique)[i], (*got.clique)[j]));
      }
      CHECK(verify_blue_clique_free(c, S, t) == !got.clique.has_value());
    }
  }
  // Above the cap the subsample answer is marked non-exact unless it finds one.
  Coloring big = Coloring::all_red(5000);
  CliqueSearch sampled = find_blue_clique(big, iota_vertices(5000), 3, 100);
  CHECK_FALSE(sampled.clique.has_value());
  CHECK_FALSE(sampled.exact);
}

TEST_CASE("verify_red_cube accepts a red cube and pins down defects") {
  Coloring red = Coloring::all_red(32);
  Embedding ok{3, {0, 1, 2, 3, 4, 5, 6, 7}};
  CHECK(verify_red_cube(red, ok).valid);

  Embedding dup{3, {0, 1, 2, 3, 4, 5, 6, 6}};
  CubeCheck r1 = verify_red_cube(red, dup);
  CHECK_FALSE(r1.valid);
  CHECK(r1.reason.find("injective") != std::string::npos);

  Embedding short_map{3, {0, 1, 2}};
  CHECK_FALSE(verify_red_cube(red, short_map).valid);

  // One blue cube edge invalidates; a blue non-edge pair is irrelevant.
  Coloring m = Coloring::explicit_matrix(8);
  m.set_color(0, 3, Color::blue);  // 000-011: Hamming distance 2, not an edge
  CHECK(verify_red_cube(m, ok).valid);
  m.set_color(2, 3, Color::blue);  // 010-011: a cube edge
  CubeCheck r2 = verify_red_cube(m, ok);
  CHECK_FALSE(r2.valid);
  CHECK(r2.reason.find("blue") != std::string::npos);
}
