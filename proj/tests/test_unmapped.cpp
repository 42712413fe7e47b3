#include <doctest.h>

#include <numeric>

#include "drawing.hpp"
#include "oracles.hpp"
#include "simembed/certify.hpp"
#include "simembed/error.hpp"
#include "simembed/generate.hpp"
#include "simembed/unmapped.hpp"

using namespace simembed;

namespace {

bool same_cycle(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a == b) return true;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return a.empty();
}

SimultaneousEmbedding single(const std::vector<GridPoint>& pts, const EdgeList& edges) {
  SimultaneousEmbedding e;
  e.coords = pts;
  e.layers = {edges};
  return e;
}

// The drawing realises `layer` iff every vertex sees its neighbours in the
// declared counterclockwise order.
void check_realises(const Layer& layer, const std::vector<GridPoint>& at) {
  const auto drawn = fixture::rotation_of(at, layer.edges);
  for (std::size_t v = 0; v < at.size(); ++v) CHECK(same_cycle(drawn[v], (*layer.rotation)[v]));
}

Layer outer(int n, EdgeList edges) {
  std::vector<Vertex> cycle(static_cast<std::size_t>(n));
  std::iota(cycle.begin(), cycle.end(), 0);
  return {LayerClass::kOuterplanar, std::move(edges), std::nullopt, cycle};
}

LayeredInstance free_instance(int n, std::vector<Layer> layers) {
  LayeredInstance inst;
  inst.n = n;
  inst.mapping = MappingMode::kFree;
  inst.layers = std::move(layers);
  return inst;
}

std::vector<int> sieve(int limit) {
  std::vector<int> primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
  for (int i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (int j = 2 * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace

TEST_CASE("grid drawing: triangle and K4") {
  CHECK(planar_grid_draw(fixture::triangle(), 3) == std::vector<GridPoint>{{0, 0}, {2, 0}, {1, 1}});
  const auto k4 = planar_grid_draw(fixture::k4(), 4);
  for (const auto& p : k4) {
    CHECK((p.x >= 0 && p.x <= 4 && p.y >= 0 && p.y <= 2));
  }
  CHECK(oracle::layers_plane(single(k4, fixture::k4().edges)));
  check_realises(fixture::k4(), k4);
  CHECK_THROWS_AS(planar_grid_draw(fixture::planar({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 4),
                  NotTriangulatedError);
}

TEST_CASE("grid drawing: random triangulations") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = seed == 0 ? 30 : 3 + static_cast<int>(seed % 35);
    const Layer l = generate(GenKind::kPlaneTriangulation, n, seed);
    const auto at = planar_grid_draw(l, n);
    for (const auto& p : at) CHECK((p.x >= 0 && p.x <= 2 * n - 4 && p.y >= 0 && p.y <= n - 2));
    CHECK(oracle::layers_plane(single(at, l.edges)));
    check_realises(l, at);
  }
}

TEST_CASE("general-position drawing") {
  auto check = [](const Layer& l, int n) {
    const auto d = planar_general_position_draw(l, n);
    const auto b = general_position_bounds(n);
    CHECK(d.sigma == 6 * n);
    CHECK(d.width == b.width);
    CHECK(d.height == b.height);
    CHECK(d.width == 6 * n * (2 * n - 4) * (2 * n + 1) + 2 * n + 1);
    CHECK(d.height == Coord{6} * n * (n - 2) * (2 * n * n + 1) + 2 * n * n + 1);
    Coord mx = 1, my = 1, lx = d.coords[0].x, ly = d.coords[0].y;
    for (const auto& p : d.coords) {
      mx = std::max(mx, p.x), my = std::max(my, p.y);
      lx = std::min(lx, p.x), ly = std::min(ly, p.y);
    }
    CHECK(lx == 1);
    CHECK(ly == 1);
    CHECK(mx <= d.width);
    CHECK(my <= d.height);
    CHECK(oracle::collinear_free(d.coords));
    CHECK(oracle::layers_plane(single(d.coords, l.edges)));
  };
  check(fixture::triangle(), 3);
  check(fixture::octahedron(), 6);
  check(generate(GenKind::kPlaneTriangulation, 25, 3), 25);
  // A non-triangulated plane layer is completed internally.
  check(fixture::planar({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 4);
}

TEST_CASE("parabola point sets") {
  const auto five = parabola_pointset(5);
  CHECK(five.p == 5);
  CHECK(five.points == std::vector<GridPoint>{{1, 1}, {2, 4}, {3, 4}, {4, 1}, {5, 0}});
  CHECK(parabola_pointset(6).p == 7);
  CHECK(oracle::collinear_free(parabola_pointset(100).points));

  const auto primes = sieve(500);
  for (int v = 0; v <= 500; ++v) CHECK(is_prime(v) == std::binary_search(primes.begin(), primes.end(), v));
  for (int n = 2; n <= 200; ++n) {
    const auto s = parabola_pointset(n);
    CHECK(s.p == *std::lower_bound(primes.begin(), primes.end(), n));
    CHECK(s.p < 2 * n);
  }
  for (int n = 3; n <= 40; ++n) CHECK(oracle::collinear_free(parabola_pointset(n).points));
}

TEST_CASE("brute-force point assignment") {
  const std::vector<GridPoint> three{{0, 0}, {4, 0}, {1, 3}};
  const auto tri = brute_force_point_assignment(fixture::outerplanar_cycle(3), three);
  REQUIRE(tri);
  CHECK(*tri == std::vector<int>{0, 1, 2});

  const std::vector<GridPoint> convex{{0, 0}, {4, 0}, {4, 4}, {0, 4}};
  const std::vector<GridPoint> nested{{0, 0}, {6, 0}, {0, 6}, {1, 1}};
  const Layer path{LayerClass::kPath, {{0, 1}, {1, 2}, {2, 3}}, std::nullopt, std::nullopt};
  CHECK(brute_force_point_assignment(path, convex));
  const Layer k4 = fixture::k4();
  CHECK(brute_force_point_assignment(k4, nested));
  CHECK_FALSE(brute_force_point_assignment(k4, convex));
  std::vector<GridPoint> many;
  for (int i = 0; i <= kBruteForceLimit; ++i) many.push_back({i, i * i});
  CHECK_THROWS_AS(brute_force_point_assignment(fixture::outerplanar_cycle(kBruteForceLimit + 1), many), BudgetExceededError);
}

TEST_CASE("outerplanar on points") {
  const std::vector<GridPoint> three{{0, 0}, {4, 0}, {1, 3}};
  const auto tri = embed_outerplanar_on_points(fixture::outerplanar_cycle(3), three);
  CHECK(std::set<int>(tri.begin(), tri.end()).size() == 3);

  // 4-cycle with a chord: the answer is one of the crossing-free bijections.
  const Layer quad = fixture::outerplanar_cycle(4, {{0, 2}});
  const std::vector<GridPoint> pts{{0, 0}, {5, 1}, {4, 4}, {1, 5}};
  const auto got = embed_outerplanar_on_points(quad, pts);
  std::vector<int> perm{0, 1, 2, 3};
  bool found = false;
  do {
    auto e = single(pts, quad.edges);
    e.assignments = PointAssignment{perm};
    if (oracle::layers_plane(e) && perm == got) found = true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(found);

  EdgeList fan;
  for (int i = 2; i < 11; ++i) fan.push_back({0, i});
  const Layer fan12 = fixture::outerplanar_cycle(12, fan);
  const auto par = parabola_pointset(12).points;
  auto e = single(par, fan12.edges);
  e.assignments = PointAssignment{embed_outerplanar_on_points(fan12, par)};
  CHECK(oracle::layers_plane(e));

  CHECK_THROWS_AS(embed_outerplanar_on_points(fixture::outerplanar_cycle(3), {{0, 0}, {1, 1}, {2, 2}}), InputMismatchError);
  CHECK_THROWS_AS(embed_outerplanar_on_points(fixture::outerplanar_cycle(4), three), InputMismatchError);
}

TEST_CASE("outerplanar on points agrees with brute force on solvability") {
  std::mt19937_64 rng(77);
  for (std::uint64_t t = 0; t < 150; ++t) {
    const int k = 3 + static_cast<int>(t % 5);
    const Layer l = generate(GenKind::kMaximalOuterplanar, k, t);
    const auto pts = oracle::general_position_points(rng, static_cast<std::size_t>(k), 12);
    const auto got = embed_outerplanar_on_points(l, pts);
    auto e = single(pts, l.edges);
    e.assignments = PointAssignment{got};
    CHECK(oracle::layers_plane(e));
    CHECK(brute_force_point_assignment(l, pts).has_value());
  }
}

TEST_CASE("planar plus outerplanar") {
  auto run = [](const Layer& plane, const Layer& op, int n) {
    const auto e = simul_embed_planar_outerplanar(plane, op, n);
    REQUIRE(e.assignments);
    const auto& a = *e.assignments;
    CHECK(a.size() == 2);
    for (const auto& bij : a) CHECK(std::set<int>(bij.begin(), bij.end()).size() == static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) CHECK(a[0][v] == v);
    CHECK(oracle::layers_plane(e));
    CHECK(oracle::collinear_free(e.coords));
    CHECK(certify_embedding(e, free_instance(n, {plane, op})).ok);
  };
  run(fixture::triangle(), outer(3, {{0, 1}, {1, 2}}), 3);
  run(fixture::octahedron(), fixture::outerplanar_cycle(6), 6);
  for (std::uint64_t s = 0; s < 10; ++s)
    run(generate(GenKind::kPlaneTriangulation, 20, s), generate(GenKind::kMaximalOuterplanar, 20, s + 100), 20);
}

TEST_CASE("outerplanar layers on the parabola set") {
  const auto one = simul_embed_outerplanars({fixture::outerplanar_cycle(3)}, 3);
  CHECK(oracle::layers_plane(one));

  EdgeList star;
  for (int i = 1; i < 8; ++i) star.push_back({0, i});
  const std::vector<Layer> three{outer(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}), outer(8, star),
                                 fixture::outerplanar_cycle(8)};
  const auto e3 = simul_embed_outerplanars(three, 8);
  CHECK(certify_embedding(e3, free_instance(8, three)).ok);
  CHECK(oracle::layers_plane(e3));

  std::vector<Layer> five;
  for (std::uint64_t s = 0; s < 5; ++s) five.push_back(generate(GenKind::kMaximalOuterplanar, 25, s));
  const auto e5 = simul_embed_outerplanars(five, 25);
  CHECK(e5.width == 29);
  CHECK(e5.height == 29);
  for (const auto& p : e5.coords) CHECK((p.x >= 1 && p.x <= 29 && p.y >= 1 && p.y <= 29));
  CHECK(certify_embedding(e5, free_instance(25, five), Bounds{29, 29}).ok);
  CHECK(oracle::layers_plane(e5));
}
