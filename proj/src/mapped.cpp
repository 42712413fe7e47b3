#include "simembed/mapped.hpp"

#include <algorithm>
#include <string>

#include "simembed/error.hpp"

namespace simembed {

namespace {

// 1-based position of every vertex; throws unless `order` permutes 0..n-1.
std::vector<Coord> positions(const std::vector<Vertex>& order, std::size_t n, const char* what) {
  if (order.size() != n) {
    throw InputMismatchError(std::string(what) + " covers " + std::to_string(order.size()) + " vertices, expected " +
                             std::to_string(n));
  }
  std::vector<Coord> pos(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || pos[v] != 0) {
      throw InputMismatchError(std::string(what) + " is not a permutation of the shared vertex set");
    }
    pos[v] = static_cast<Coord>(i + 1);
  }
  return pos;
}

// 0, 1, -1, 2, -2, ... up to +-radius.
std::vector<Coord> center_out(Coord radius) {
  std::vector<Coord> out{0};
  for (Coord d = 1; d <= radius; ++d) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

bool collinear_with_any_pair(const std::vector<GridPoint>& placed, const GridPoint& c) {
  for (std::size_t j = 0; j < placed.size(); ++j)
    for (std::size_t k = j + 1; k < placed.size(); ++k)
      if (orient(placed[j], placed[k], c) == 0) return true;
  return false;
}

}  // namespace

SimultaneousEmbedding embed_two_paths(const PathOrder& p1, const PathOrder& p2) {
  const std::size_t n = p1.order.size();
  const auto x = positions(p1.order, n, "first path");
  const auto y = positions(p2.order, n, "second path");
  SimultaneousEmbedding e;
  e.coords.reserve(n);
  for (std::size_t v = 0; v < n; ++v) e.coords.push_back({x[v], y[v]});
  e.layers = {path_edges(p1), path_edges(p2)};
  e.width = e.height = static_cast<Coord>(n);
  return e;
}

RefinementCell refinement_cell(Coord base_extent) {
  const Coord n = std::max<Coord>(base_extent, 1);
  return {2 * n + 1, 2 * n * n + 1};
}

std::vector<GridPoint> refine_general_position(const std::vector<GridPoint>& points, Coord base_extent) {
  require_distinct(points);
  // The counting argument needs at least as many cell columns as points.
  const RefinementCell cell = refinement_cell(std::max<Coord>(base_extent, static_cast<Coord>(points.size())));
  const auto cols = center_out(cell.half_width());
  const Coord half_h = cell.half_height();

  std::vector<GridPoint> placed;
  placed.reserve(points.size());
  for (const auto& p : points) {
    const GridPoint center{p.x * cell.width, p.y * cell.height};
    check_budget({center.x + (center.x < 0 ? -cell.half_width() : cell.half_width()),
                  center.y + (center.y < 0 ? -half_h : half_h)});
    // Rows are generated lazily: there are 2N^2 + 1 of them.
    bool done = false;
    for (Coord step = 0; step <= half_h && !done; ++step) {
      const Coord rows[2] = {step, -step};
      for (int r = 0; r < (step == 0 ? 1 : 2) && !done; ++r) {
        for (Coord dx : cols) {
          const GridPoint c{center.x + dx, center.y + rows[r]};
          if (!collinear_with_any_pair(placed, c)) {
            placed.push_back(c);
            done = true;
            break;
          }
        }
      }
    }
    if (!done) throw InternalError("no collinearity-free slot left in a refinement cell");
  }
  return placed;
}

SimultaneousEmbedding embed_two_caterpillars(const Caterpillar& c1, const Caterpillar& c2) {
  const std::size_t n = c1.vertex_count();
  if (c2.vertex_count() != n) throw InputMismatchError("caterpillars have different vertex counts");
  c1.validate(static_cast<int>(n));
  c2.validate(static_cast<int>(n));

  const auto base = embed_two_paths(caterpillar_to_path(c1), caterpillar_to_path(c2));
  const Coord extent = static_cast<Coord>(n);
  const RefinementCell cell = refinement_cell(extent);
  auto refined = refine_general_position(base.coords, extent);

  SimultaneousEmbedding e;
  // Base coordinates start at 1, so cell 1 begins at width - half_width.
  for (auto& q : refined) {
    q.x -= cell.width - cell.half_width() - 1;
    q.y -= cell.height - cell.half_height() - 1;
  }
  e.coords = std::move(refined);
  e.layers = {c1.edges(), c2.edges()};
  e.width = extent * cell.width;
  e.height = extent * cell.height;
  return e;
}

PathCaterpillarEmbedding embed_path_caterpillar(const PathOrder& p, const Caterpillar& c) {
  const std::size_t n = p.order.size();
  if (c.vertex_count() != n) throw InputMismatchError("path and caterpillar have different vertex counts");
  c.validate(static_cast<int>(n));
  const auto y = positions(p.order, n, "path");

  std::vector<Coord> x(n, 0);
  for (std::size_t i = 0; i < c.spine.size(); ++i) {
    const Coord oc = static_cast<Coord>(i + 1);
    x[c.spine[i]] = 2 * oc;
    for (Vertex leg : c.legs[i]) x[leg] = 2 * oc + 1;
  }

  int shifts = 0;
  auto point = [&](Vertex v) { return GridPoint{x[v], y[v]}; };
  for (std::size_t i = 0; i + 1 < c.spine.size(); ++i) {
    const Vertex here = c.spine[i], next = c.spine[i + 1];
    int local = 0;
    for (;;) {
      const bool blocked = std::any_of(c.legs[i].begin(), c.legs[i].end(),
                                       [&](Vertex leg) { return orient(point(here), point(next), point(leg)) == 0; });
      if (!blocked) break;
      if (++local > static_cast<int>(c.legs[i].size())) {
        throw InternalError("spine vertex " + std::to_string(here) + " needed more shifts than it has legs");
      }
      const Coord from = x[next];
      for (auto& xv : x)
        if (xv >= from) ++xv;
    }
    shifts += local;
  }

  PathCaterpillarEmbedding out;
  auto& e = out.embedding;
  for (std::size_t v = 0; v < n; ++v) e.coords.push_back(point(static_cast<Vertex>(v)));
  e.layers = {path_edges(p), c.edges()};
  e.width = n == 0 ? 0 : *std::max_element(x.begin(), x.end());
  e.height = static_cast<Coord>(n);
  out.shifts = shifts;
  return out;
}

}  // namespace simembed
