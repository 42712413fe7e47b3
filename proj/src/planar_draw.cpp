#include <algorithm>
#include <string>

#include "simembed/error.hpp"
#include "simembed/mapped.hpp"
#include "simembed/unmapped.hpp"

namespace simembed {

namespace {

// Neighbour of `head` that precedes `tail` in head's rotation, skipping
// removed vertices.
Vertex prev_alive(const Rotation& rot, const std::vector<char>& alive, Vertex head, Vertex tail) {
  const auto& around = rot[head];
  const std::size_t deg = around.size();
  const std::size_t at = static_cast<std::size_t>(std::find(around.begin(), around.end(), tail) - around.begin());
  for (std::size_t step = 1; step <= deg; ++step) {
    const Vertex w = around[(at + deg - step) % deg];
    if (alive[w]) return w;
  }
  throw InternalError("vertex " + std::to_string(head) + " has no live neighbour");
}

// Boundary of the face left of a -> b in the live subgraph, as a path
// a = c_0, ..., c_m = b.
std::vector<Vertex> outer_contour(const Rotation& rot, const std::vector<char>& alive, Vertex a, Vertex b) {
  std::vector<Vertex> walk;
  Vertex tail = a, head = b;
  do {
    walk.push_back(tail);
    const Vertex next = prev_alive(rot, alive, head, tail);
    tail = head;
    head = next;
    if (walk.size() > rot.size()) throw InternalError("outer face walk does not close");
  } while (!(tail == a && head == b));
  // walk = a, b, x_1, ..., x_j; the contour runs a, x_j, ..., x_1, b.
  std::vector<Vertex> contour{a};
  for (std::size_t i = walk.size(); i-- > 2;) contour.push_back(walk[i]);
  contour.push_back(b);
  return contour;
}

std::vector<Vertex> canonical_order(const Rotation& rot, int n, Vertex a, Vertex b) {
  std::vector<char> alive(n, 1);
  std::vector<Vertex> reversed;
  std::vector<int> where(n, -1);
  for (int k = n; k > 3; --k) {
    // The outer face lies to the right of a -> b, i.e. left of b -> a.
    const auto contour = outer_contour(rot, alive, b, a);
    std::fill(where.begin(), where.end(), -1);
    for (std::size_t i = 0; i < contour.size(); ++i) where[contour[i]] = static_cast<int>(i);

    Vertex pick = -1;
    for (std::size_t i = 1; i + 1 < contour.size(); ++i) {
      const Vertex v = contour[i];
      if (pick >= 0 && v > pick) continue;
      bool chord = false;
      for (Vertex w : rot[v]) {
        if (!alive[w] || where[w] < 0) continue;
        const int d = std::abs(where[w] - static_cast<int>(i));
        if (d > 1) {
          chord = true;
          break;
        }
      }
      if (!chord) pick = v;
    }
    if (pick < 0) throw InternalError("no chord-free contour vertex; input is not a triangulation");
    alive[pick] = 0;
    reversed.push_back(pick);
  }
  Vertex third = -1;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v] && v != a && v != b) third = v;
  std::vector<Vertex> order{a, b, third};
  order.insert(order.end(), reversed.rbegin(), reversed.rend());
  return order;
}

}  // namespace

std::vector<GridPoint> planar_grid_draw(const Layer& tri, int n) {
  if (n < 3) throw NotTriangulatedError("shift method needs at least 3 vertices");
  check_plane_embedding(tri, n);
  if (static_cast<int>(tri.edges.size()) != 3 * n - 6) {
    throw NotTriangulatedError("a triangulation on " + std::to_string(n) + " vertices has " + std::to_string(3 * n - 6) +
                               " edges, got " + std::to_string(tri.edges.size()));
  }
  const Rotation& rot = *tri.rotation;
  const Vertex a = 0, b = rot[0][0];
  const auto order = canonical_order(rot, n, a, b);

  std::vector<Coord> x(n, 0), y(n, 0);
  std::vector<std::vector<Vertex>> moves(n);  // vertices dragged along by a shift
  std::vector<char> placed(n, 0);
  for (int i = 0; i < 3; ++i) {
    placed[order[i]] = 1;
    moves[order[i]] = {order[i]};
  }
  x[order[0]] = 0;
  x[order[1]] = 2;
  x[order[2]] = 1;
  y[order[2]] = 1;
  std::vector<Vertex> contour{order[0], order[2], order[1]};

  for (int k = 3; k < n; ++k) {
    const Vertex v = order[k];
    int lo = -1, hi = -1, count = 0, neighbours = 0;
    for (Vertex w : rot[v]) {
      if (!placed[w]) continue;
      ++neighbours;
      const auto it = std::find(contour.begin(), contour.end(), w);
      if (it == contour.end()) throw InternalError("canonical order broken: neighbour below the contour");
      const int idx = static_cast<int>(it - contour.begin());
      lo = lo < 0 ? idx : std::min(lo, idx);
      hi = std::max(hi, idx);
      ++count;
    }
    if (neighbours < 2 || hi - lo + 1 != count) throw InternalError("canonical order broken: neighbours not contiguous");

    for (int i = lo + 1; i < hi; ++i)
      for (Vertex u : moves[contour[i]]) x[u] += 1;
    for (int i = hi; i < static_cast<int>(contour.size()); ++i)
      for (Vertex u : moves[contour[i]]) x[u] += 2;

    const Vertex wl = contour[lo], wr = contour[hi];
    // Slope +1 from wl meets slope -1 from wr.
    x[v] = (x[wl] - y[wl] + x[wr] + y[wr]) / 2;
    y[v] = (y[wl] - x[wl] + x[wr] + y[wr]) / 2;

    moves[v] = {v};
    for (int i = lo + 1; i < hi; ++i) moves[v].insert(moves[v].end(), moves[contour[i]].begin(), moves[contour[i]].end());
    placed[v] = 1;
    contour.erase(contour.begin() + lo + 1, contour.begin() + hi);
    contour.insert(contour.begin() + lo + 1, v);
  }

  std::vector<GridPoint> out(n);
  for (int v = 0; v < n; ++v) out[v] = {x[v], y[v]};
  return out;
}

GeneralPositionDrawing general_position_bounds(int n) {
  GeneralPositionDrawing g;
  const Coord nn = n;
  const RefinementCell cell = refinement_cell(nn);
  g.sigma = 6 * nn;
  g.width = g.sigma * (2 * nn - 4) * cell.width + 2 * cell.half_width() + 1;
  g.height = g.sigma * (nn - 2) * cell.height + 2 * cell.half_height() + 1;
  return g;
}

GeneralPositionDrawing planar_general_position_draw(const Layer& plane, int n) {
  const auto aug = triangulate_plane(plane, n);
  const auto base = planar_grid_draw(aug.layer, n);

  GeneralPositionDrawing g = general_position_bounds(n);
  // A non-collinear triple on the base grid has |orient| >= 1; per-axis moves
  // below 1/(2 sigma) change the determinant by at most 1 - 2/n + 1/(18n^2).
  std::vector<GridPoint> scaled;
  scaled.reserve(base.size());
  for (const auto& p : base) scaled.push_back({p.x * g.sigma, p.y * g.sigma});
  auto refined = refine_general_position(scaled, n);

  Coord min_x = refined.front().x, min_y = refined.front().y;
  for (const auto& p : refined) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  for (auto& p : refined) {
    p.x -= min_x - 1;
    p.y -= min_y - 1;
  }
  g.coords = std::move(refined);
  return g;
}

}  // namespace simembed
