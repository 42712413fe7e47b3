#include "simembed/geom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "simembed/error.hpp"

namespace simembed {

namespace {

__extension__ typedef __int128 Wide;

bool within_budget(Coord v) { return v >= -kCoordinateBudget && v <= kCoordinateBudget; }

std::string describe(const GridPoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Orientation without the budget check; callers validate first.
int orient_unchecked(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  const Wide det = Wide{b.x - a.x} * Wide{c.y - a.y} - Wide{b.y - a.y} * Wide{c.x - a.x};
  return (det > 0) - (det < 0);
}

// c lies inside the bounding box of segment ab (assumes collinearity).
bool in_box(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

}  // namespace

void check_budget(const GridPoint& p) {
  if (!within_budget(p.x) || !within_budget(p.y)) {
    throw CoordinateBudgetError("coordinate " + describe(p) + " exceeds budget 2^40");
  }
}

int orient(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  check_budget(a);
  check_budget(b);
  check_budget(c);
  return orient_unchecked(a, b, c);
}

bool segments_conflict(const Segment& s1, const Segment& s2) {
  for (const Segment* s : {&s1, &s2}) {
    check_budget(s->a);
    check_budget(s->b);
    if (s->a == s->b) throw DegenerateSegmentError("degenerate segment at " + describe(s->a));
  }
  const GridPoint &a = s1.a, &b = s1.b, &c = s2.a, &d = s2.b;

  const bool same = (a == c && b == d) || (a == d && b == c);
  if (same) return true;

  const int o1 = orient_unchecked(a, b, c);
  const int o2 = orient_unchecked(a, b, d);
  const int o3 = orient_unchecked(c, d, a);
  const int o4 = orient_unchecked(c, d, b);

  const bool shares = a == c || a == d || b == c || b == d;
  if (shares) {
    // Exactly one endpoint in common. The segments conflict only when they are
    // collinear and point the same way from the shared vertex.
    if (o1 != 0 || o2 != 0) return false;
    const GridPoint& pivot = (a == c || a == d) ? a : b;
    const GridPoint& p = (pivot == a) ? b : a;
    const GridPoint& q = (pivot == c) ? d : c;
    const Wide dot = Wide{p.x - pivot.x} * Wide{q.x - pivot.x} + Wide{p.y - pivot.y} * Wide{q.y - pivot.y};
    return dot > 0;
  }

  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  if (o1 == 0 && in_box(a, b, c)) return true;
  if (o2 == 0 && in_box(a, b, d)) return true;
  if (o3 == 0 && in_box(c, d, a)) return true;
  if (o4 == 0 && in_box(c, d, b)) return true;
  return false;
}

std::optional<Triple> find_collinear_triple(std::span<const GridPoint> points) {
  for (const auto& p : points) check_budget(p);
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orient_unchecked(points[i], points[j], points[k]) == 0) return Triple{i, j, k};
  return std::nullopt;
}

std::vector<Triple> all_collinear_triples(std::span<const GridPoint> points) {
  for (const auto& p : points) check_budget(p);
  std::vector<Triple> out;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orient_unchecked(points[i], points[j], points[k]) == 0) out.push_back({i, j, k});
  return out;
}

void require_distinct(std::span<const GridPoint> points) {
  std::map<GridPoint, std::size_t> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [it, inserted] = seen.emplace(points[i], i);
    if (!inserted) {
      throw DuplicatePointError("points " + std::to_string(it->second) + " and " + std::to_string(i) +
                                " coincide at " + describe(points[i]));
    }
  }
}

std::vector<std::size_t> convex_hull(std::span<const GridPoint> points) {
  if (points.size() < 3) throw InputMismatchError("convex hull needs at least 3 points");
  for (const auto& p : points) check_budget(p);
  require_distinct(points);

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return points[l] < points[r]; });

  // Andrew's monotone chain; collinear boundary points are dropped.
  std::vector<std::size_t> hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t idx : order) {
    while (k >= 2 && orient_unchecked(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= 0) --k;
    hull[k++] = idx;
  }
  const std::size_t lower = k + 1;
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
    while (k >= lower && orient_unchecked(points[hull[k - 2]], points[hull[k - 1]], points[*it]) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace simembed
