#include <numeric>
#include <string>

#include "simembed/error.hpp"
#include "simembed/unmapped.hpp"

namespace simembed {

bool is_prime(Coord v) {
  if (v < 2) return false;
  for (Coord d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

ParabolaSet parabola_pointset(int n) {
  if (n < 0) throw InputMismatchError("negative point count");
  ParabolaSet s;
  s.p = std::max<Coord>(n, 2);
  while (!is_prime(s.p)) ++s.p;
  for (Coord t = 1; t <= n; ++t) s.points.push_back({t, (t * t) % s.p});
  // A collinear triple would put three parabola points on one line mod p.
  if (auto bad = find_collinear_triple(s.points)) {
    throw InternalError("parabola set has a collinear triple at t = " + std::to_string(bad->i + 1));
  }
  return s;
}

SimultaneousEmbedding simul_embed_outerplanars(const std::vector<Layer>& layers, int n) {
  const ParabolaSet set = parabola_pointset(n);
  SimultaneousEmbedding e;
  for (const auto& p : set.points) e.coords.push_back({p.x, p.y + 1});
  e.width = e.height = set.p;
  e.assignments.emplace();
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto aug = maximalize_outerplanar(layers[i], n, /*allow_missing_cycle_edges=*/true);
    e.assignments->push_back(embed_outerplanar_on_points(aug.layer, e.coords));
    e.layers.push_back(layers[i].edges);
  }
  return e;
}

SimultaneousEmbedding simul_embed_planar_outerplanar(const Layer& plane, const Layer& outerplanar, int n) {
  auto drawing = planar_general_position_draw(plane, n);
  const auto aug = maximalize_outerplanar(outerplanar, n, /*allow_missing_cycle_edges=*/true);

  SimultaneousEmbedding e;
  e.coords = std::move(drawing.coords);
  e.width = drawing.width;
  e.height = drawing.height;
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  e.assignments = PointAssignment{identity, embed_outerplanar_on_points(aug.layer, e.coords)};
  e.layers = {plane.edges, outerplanar.edges};
  return e;
}

}  // namespace simembed
