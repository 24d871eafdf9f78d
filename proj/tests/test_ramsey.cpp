#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qramsey/ramsey.hpp"

using namespace qramsey;

TEST_CASE("stirling numbers match frozen tables and the defining identity") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(7, 7) == 1);
  CHECK(stirling2(7, 1) == 1);

  // Row sums are the Bell numbers.
  const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int t = 0; t <= 8; ++t) {
    mpz_class row = 0;
    for (int k = 0; k <= t; ++k) row += stirling2(t, k);
    CHECK(row == bell[t]);
  }

  // x^t = sum_k S(t,k) * x(x-1)...(x-k+1), at enough points to pin every
  // row uniquely (falling factorials are a polynomial basis).
  for (int t = 0; t <= 8; ++t)
    for (int x = 0; x <= 10; ++x) {
      mpz_class lhs;
      mpz_pow_ui(lhs.get_mpz_t(), mpz_class(x).get_mpz_t(), t);
      mpz_class rhs = 0;
      for (int k = 0; k <= t; ++k)
        rhs += stirling2(t, k) * falling_factorial(x, k);
      CHECK(lhs == rhs);
    }

  CHECK_THROWS_AS(stirling2(21, 3), std::out_of_range);
  CHECK_THROWS_AS(stirling2(4, 5), std::out_of_range);
  CHECK_THROWS_AS(stirling2(-1, 0), std::out_of_range);
}

TEST_CASE("falling factorials and binomials") {
  CHECK(falling_factorial(5, 3) == 60);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(-1, 2) == 2);  // (-1)(-2)
  CHECK(falling_factorial(3, 5) == 0);   // hits the zero factor
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(4, -1) == 0);

  // Ordered set partitions: the Fubini numbers.
  const long fubini[] = {1, 1, 3, 13, 75, 541, 4683, 47293, 545835};
  for (int s = 0; s <= 8; ++s) CHECK(labelled_partitions(s) == fubini[s]);
}

TEST_CASE("series bounds pin the weight-sum integers three ways") {
  const long known[] = {0, 2, 6, 26, 150, 1082, 9366, 94586, 1091670};
  for (int s = 1; s <= 8; ++s) {
    SeriesBounds b = series_bounds(s);
    CHECK(b.stirling_route == known[s]);
    CHECK(b.routes_agree);
    CHECK(b.tail_certified);
  }

  // The s = 5 weight sum decomposed by block count, and its 2^12 headroom.
  mpz_class x5 = 2 * (mpz_class(1) + 30 + 150 + 240 + 120);
  CHECK(series_bounds(5).stirling_route == x5);
  CHECK(x5 == 1082);
  CHECK(x5 < 4096);

  for (int s = 1; s <= 12; ++s) {
    SeriesBounds b = series_bounds(s);
    CHECK(b.routes_agree);
    CHECK(b.tail_certified);
  }
  for (int s = 1; s <= 20; ++s) {
    SeriesBounds b = series_bounds(s);
    CHECK(b.within_power_bound);
    mpz_class ss;
    mpz_pow_ui(ss.get_mpz_t(), mpz_class(s).get_mpz_t(), s);
    CHECK(b.power_bound == 2 * ss);
    CHECK(labelled_partitions(s) <= ss);
  }

  // A short truncation still reproduces the integer but cannot certify the
  // cubic tail; the certificate is allowed to be conservative, never wrong.
  SeriesBounds tight = series_bounds(3, 16);
  CHECK(tight.routes_agree);
  CHECK_FALSE(tight.tail_certified);
  CHECK(series_bounds(1, 16).tail_certified);

  CHECK_THROWS_AS(series_bounds(0), std::out_of_range);
  CHECK_THROWS_AS(series_bounds(21), std::out_of_range);
  CHECK_THROWS_AS(series_bounds(3, 15), std::out_of_range);
}

TEST_CASE("small graph constructors") {
  SmallGraph q2 = SmallGraph::cube(2);
  CHECK(q2.order == 4);
  CHECK(q2.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(q2.degree(v) == 2);
  SmallGraph q3 = SmallGraph::cube(3);
  CHECK(q3.order == 8);
  CHECK(q3.edge_count() == 12);
  for (int v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);
  CHECK(q3.has_edge(0, 4));
  CHECK_FALSE(q3.has_edge(0, 3));
  CHECK(SmallGraph::clique(4).edge_count() == 6);
  CHECK(SmallGraph::cube(0).order == 1);
  CHECK_THROWS_AS(SmallGraph::cube(4), std::out_of_range);
}

TEST_CASE("brute-force arrowing finds the edge-versus-triangle threshold") {
  SmallGraph edge = SmallGraph::cube(1);

  ArrowResult two = brute_force_arrow(edge, 3, 2);
  CHECK_FALSE(two.arrows);
  REQUIRE(two.witness_blue.has_value());
  CHECK(*two.witness_blue == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(two.witness_red->empty());

  ArrowResult three = brute_force_arrow(edge, 3, 3);
  CHECK(three.arrows);
  CHECK(three.colorings_checked == 6);  // 3 prefix classes x 2 free edges
  CHECK_FALSE(three.witness_blue.has_value());

  CHECK(brute_force_ramsey(edge, 3, 8) == 3);
  for (int n = 3; n <= 7; ++n) CHECK(brute_force_arrow(edge, 3, n).arrows);

  CHECK(brute_force_ramsey(SmallGraph::clique(2), 2, 5) == 2);

  CHECK_THROWS_AS(brute_force_arrow(edge, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(brute_force_arrow(edge, 3, 9), std::out_of_range);
  CHECK_THROWS_AS(brute_force_arrow(edge, 1, 3), std::out_of_range);
}

TEST_CASE("brute-force arrowing finds the square-versus-triangle threshold") {
  SmallGraph square = SmallGraph::cube(2);
  CHECK(brute_force_ramsey(square, 3, 7) == 7);

  // The refuting coloring of K_6 must partition the edge set, span no blue
  // triangle, and span no red 4-cycle; all three checked from scratch.
  ArrowResult six = brute_force_arrow(square, 3, 6);
  REQUIRE_FALSE(six.arrows);
  REQUIRE(six.witness_blue.has_value());
  REQUIRE(six.witness_red.has_value());
  std::set<std::pair<int, int>> blue(six.witness_blue->begin(),
                                     six.witness_blue->end());
  std::set<std::pair<int, int>> red(six.witness_red->begin(),
                                    six.witness_red->end());
  CHECK(blue.size() + red.size() == 15);
  for (const auto& e : blue) CHECK(red.count(e) == 0);

  auto is_blue = [&](int u, int v) {
    return blue.count({std::min(u, v), std::max(u, v)}) > 0;
  };
  auto is_red = [&](int u, int v) { return !is_blue(u, v); };
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        bool blue_triangle = is_blue(a, b) && is_blue(b, c) && is_blue(a, c);
        CHECK_FALSE(blue_triangle);
      }
  auto red_cycle = [&](int a, int b, int c, int d) {
    return is_red(a, b) && is_red(b, c) && is_red(c, d) && is_red(d, a);
  };
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d) {
          CHECK_FALSE(red_cycle(a, b, c, d));
          CHECK_FALSE(red_cycle(a, b, d, c));
          CHECK_FALSE(red_cycle(a, c, b, d));
        }
}

TEST_CASE("lower-bound certificates verify the blocked colorings") {
  LowerBoundCertificate c32 = lower_bound_certificate(3, 2);
  CHECK(c32.ok);
  CHECK(c32.N == 6);
  CHECK(c32.block == 3);
  CHECK(c32.blue_parts == 2);
  CHECK(c32.structure_ok);
  CHECK(c32.max_red_component == 3);
  CHECK(c32.no_red_cube);
  CHECK(c32.no_blue_clique);
  CHECK(c32.note.find("complete") != std::string::npos);

  LowerBoundCertificate c51 = lower_bound_certificate(5, 1);
  CHECK(c51.ok);
  CHECK(c51.N == 4);
  CHECK(c51.block == 1);
  CHECK(c51.max_red_component == 1);

  LowerBoundCertificate c46 = lower_bound_certificate(4, 6);
  CHECK(c46.ok);
  CHECK(c46.N == 189);
  CHECK(c46.max_red_component == 63);

  CHECK_THROWS_AS(lower_bound_certificate(2, 3), std::out_of_range);
  CHECK_THROWS_AS(lower_bound_certificate(7, 3), std::out_of_range);
  CHECK_THROWS_AS(lower_bound_certificate(3, 0), std::out_of_range);
  CHECK_THROWS_AS(lower_bound_certificate(3, 11), std::out_of_range);
}
