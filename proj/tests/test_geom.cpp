#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simembed/error.hpp"
#include "simembed/geom.hpp"
#include "simembed/unmapped.hpp"

using namespace simembed;

TEST_CASE("orient on basic turns") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orient({0, 0}, {2, 0}, {1, -5}) == -1);
}

TEST_CASE("orient agrees with arbitrary precision at the budget edge") {
  std::mt19937_64 rng(11);
  const auto B = static_cast<std::uint64_t>(kCoordinateBudget);
  auto coord = [&] { return static_cast<Coord>(draw_below(rng, 2 * B + 1)) - kCoordinateBudget; };
  for (int t = 0; t < 10000; ++t) {
    GridPoint a{coord(), coord()}, b{coord(), coord()}, c{coord(), coord()};
    if (t % 5 == 0) c = {a.x + 2 * (b.x - a.x) / 3, a.y + 2 * (b.y - a.y) / 3};  // near-collinear
    if (c.x < -kCoordinateBudget || c.x > kCoordinateBudget || c.y < -kCoordinateBudget || c.y > kCoordinateBudget) continue;
    REQUIRE(orient(a, b, c) == oracle::orient_exact(a, b, c));
  }
  const Coord B2 = kCoordinateBudget;
  CHECK(orient({-B2, -B2}, {B2, B2}, {B2 - 1, B2}) == 1);
  CHECK(orient({-B2, -B2}, {B2, B2}, {0, 0}) == 0);
}

TEST_CASE("orient flips sign under argument swaps") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    auto p = oracle::distinct_points(rng, 3, 7, 7);
    const int s = orient(p[0], p[1], p[2]);
    CHECK(orient(p[1], p[0], p[2]) == -s);
    CHECK(orient(p[0], p[2], p[1]) == -s);
    CHECK(orient(p[2], p[1], p[0]) == -s);
    CHECK((s == 0) == find_collinear_triple(p).has_value());
  }
}

TEST_CASE("coordinates beyond the budget are rejected") {
  CHECK_THROWS_AS(orient({0, 0}, {kCoordinateBudget + 1, 0}, {0, 1}), CoordinateBudgetError);
  CHECK_THROWS_AS(check_budget({0, -kCoordinateBudget - 1}), CoordinateBudgetError);
  CHECK_NOTHROW(check_budget({kCoordinateBudget, -kCoordinateBudget}));
}

TEST_CASE("segment conflicts") {
  CHECK(segments_conflict({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
  CHECK_FALSE(segments_conflict({{0, 0}, {1, 1}}, {{1, 1}, {2, 0}}));
  CHECK(segments_conflict({{0, 0}, {3, 0}}, {{1, 0}, {2, 0}}));
  CHECK(segments_conflict({{0, 0}, {2, 0}}, {{0, 0}, {1, 0}}));  // shared endpoint, overlapping
  CHECK_FALSE(segments_conflict({{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}));
  CHECK(segments_conflict({{0, 0}, {2, 0}}, {{1, 0}, {1, 5}}));  // endpoint on interior
  CHECK_FALSE(segments_conflict({{0, 0}, {2, 0}}, {{0, 1}, {2, 1}}));
  CHECK(segments_conflict({{0, 0}, {2, 0}}, {{2, 0}, {0, 0}}));
  CHECK_THROWS_AS(segments_conflict({{1, 1}, {1, 1}}, {{0, 0}, {2, 2}}), DegenerateSegmentError);
}

TEST_CASE("segment conflicts match the rational oracle and are symmetric") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20000; ++t) {
    auto p = oracle::distinct_points(rng, 2, 5, 5);
    auto q = oracle::distinct_points(rng, 2, 5, 5);
    const Segment s1{p[0], p[1]}, s2{q[0], q[1]};
    const bool got = segments_conflict(s1, s2);
    REQUIRE(got == oracle::conflict(p[0], p[1], q[0], q[1]));
    REQUIRE(got == segments_conflict(s2, s1));
    REQUIRE(got == segments_conflict({p[1], p[0]}, s2));
  }
}

TEST_CASE("collinear triples") {
  const std::vector<GridPoint> diag{{0, 0}, {1, 1}, {2, 2}};
  auto t = find_collinear_triple(diag);
  REQUIRE(t);
  CHECK(*t == Triple{0, 1, 2});
  CHECK_FALSE(find_collinear_triple(std::vector<GridPoint>{{0, 0}, {1, 0}, {0, 1}}));
  const auto par = parabola_pointset(7).points;
  CHECK_FALSE(find_collinear_triple(par));
  CHECK(oracle::collinear_free(par));

  std::mt19937_64 rng(9);
  for (int r = 0; r < 200; ++r) {
    auto pts = oracle::distinct_points(rng, 7, 6, 6);
    CHECK(find_collinear_triple(pts).has_value() == !oracle::collinear_free(pts));
    std::size_t count = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        for (std::size_t k = j + 1; k < pts.size(); ++k) count += oracle::orient_exact(pts[i], pts[j], pts[k]) == 0;
    CHECK(all_collinear_triples(pts).size() == count);
  }
}

TEST_CASE("convex hull") {
  const std::vector<GridPoint> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(convex_hull(square) == std::vector<std::size_t>{0, 1, 2, 3});
  const std::vector<GridPoint> tri{{0, 0}, {4, 0}, {0, 4}, {1, 1}};
  CHECK(convex_hull(tri) == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(convex_hull(std::vector<GridPoint>{{0, 0}, {1, 1}, {0, 0}}), DuplicatePointError);
}

TEST_CASE("convex hull agrees with the halfplane oracle") {
  auto check = [](const std::vector<GridPoint>& pts) {
    const auto hull = convex_hull(pts);
    std::vector<bool> on(pts.size(), false);
    for (auto i : hull) on[i] = true;
    for (std::size_t i = 0; i < pts.size(); ++i) REQUIRE(on[i] == !oracle::inside_others(pts, i));
    for (std::size_t i = 0; i < hull.size(); ++i)
      REQUIRE(oracle::orient_exact(pts[hull[i]], pts[hull[(i + 1) % hull.size()]], pts[hull[(i + 2) % hull.size()]]) > 0);
    for (const auto& p : pts) REQUIRE(!(p < pts[hull[0]]));
  };
  check(parabola_pointset(5).points);
  std::mt19937_64 rng(21);
  for (int r = 0; r < 300; ++r) {
    auto pts = oracle::distinct_points(rng, 3 + draw_below(rng, 7), 6, 6);
    bool flat = true;
    for (std::size_t k = 2; k < pts.size(); ++k) flat = flat && orient(pts[0], pts[1], pts[k]) == 0;
    if (!flat) check(pts);
  }
}

TEST_CASE("duplicate points are rejected") {
  CHECK_THROWS_AS(require_distinct(std::vector<GridPoint>{{1, 2}, {3, 4}, {1, 2}}), DuplicatePointError);
  CHECK_NOTHROW(require_distinct(std::vector<GridPoint>{{1, 2}, {2, 1}}));
}
