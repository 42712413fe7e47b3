#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "simembed/error.hpp"
#include "simembed/unmapped.hpp"

namespace simembed {

namespace {

using Index = int;  // into the point list

struct Splitter {
  const std::vector<GridPoint>& pts;
  const std::vector<Vertex>& cycle;
  std::unordered_set<std::uint64_t> adjacent;
  std::vector<int> assignment;

  static std::uint64_t key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
  }
  bool has_edge(Vertex a, Vertex b) const { return adjacent.count(key(a, b)) != 0; }
  Vertex at(int pos) const { return cycle[static_cast<std::size_t>(pos) % cycle.size()]; }
  const GridPoint& P(Index i) const { return pts[static_cast<std::size_t>(i)]; }

  [[noreturn]] static void invariant(const std::string& what) {
    throw InternalError("hull-edge invariant violated: " + what);
  }

  // Some line through r has `left` (with p) on one closed side and `right`
  // (with q) on the other.
  bool separated(Index p, Index q, Index r, const std::vector<Index>& left, const std::vector<Index>& right) const {
    std::vector<Index> l(left), rr(right);
    l.push_back(p);
    rr.push_back(q);
    std::vector<Index> pivots(l);
    pivots.insert(pivots.end(), rr.begin(), rr.end());
    for (Index z : pivots) {
      int side_l = 0, side_r = 0;
      bool ok = true;
      for (Index a : l) {
        const int o = orient(P(r), P(z), P(a));
        if (o == 0) continue;
        if (side_l == 0) side_l = o;
        if (o != side_l) ok = false;
      }
      for (Index b : rr) {
        const int o = orient(P(r), P(z), P(b));
        if (o == 0) continue;
        if (side_r == 0) side_r = o;
        if (o != side_r) ok = false;
      }
      if (ok && (side_l == 0 || side_r == 0 || side_l != side_r)) return true;
    }
    return false;
  }

  // Polygon c_s, ..., c_t (positions along the outer cycle) with base edge
  // c_s c_t already on hull edge (p, q) of {p, q} + rest.
  void solve(int s, int t, Index p, Index q, std::vector<Index> rest) {
    if (t - s <= 1) {
      if (!rest.empty()) invariant("points left over for an empty polygon");
      return;
    }
    int w = -1;
    for (int j = s + 1; j < t; ++j)
      if (has_edge(at(s), at(j)) && has_edge(at(j), at(t))) {
        w = j;
        break;
      }
    if (w < 0) throw InternalError("layer is not maximal outerplanar: no triangle on a base edge");
    const std::size_t n_left = static_cast<std::size_t>(w - s - 1);  // goes with p
    const std::size_t m = rest.size();
    if (m != static_cast<std::size_t>(t - s - 1)) invariant("point count differs from polygon size");

    const int side = orient(P(p), P(q), P(rest.front()));
    for (Index z : rest)
      if (orient(P(p), P(q), P(z)) != side) invariant("base edge is not a hull edge of its subproblem");

    // Angular order around p starting at ray p->q.
    std::sort(rest.begin(), rest.end(), [&](Index a, Index b) { return orient(P(p), P(a), P(b)) == side; });
    const Index anchor = rest[m - 1 - n_left];  // exactly n_left points beyond line p-anchor

    // Among anchor and the points inside triangle p q anchor, the first one
    // seen from q (ray q->p) spans an empty triangle with p and q.
    Index r = anchor;
    for (Index z : rest) {
      if (z == anchor) continue;
      const bool inside = orient(P(p), P(q), P(z)) == orient(P(p), P(q), P(anchor)) &&
                          orient(P(q), P(anchor), P(z)) == orient(P(q), P(anchor), P(p)) &&
                          orient(P(anchor), P(p), P(z)) == orient(P(anchor), P(p), P(q));
      if (inside && orient(P(q), P(z), P(r)) == -side) r = z;
    }

    const int q_side_of_pr = orient(P(p), P(r), P(q));
    const int p_side_of_qr = orient(P(q), P(r), P(p));
    std::vector<Index> left, right, both;
    for (Index z : rest) {
      if (z == r) continue;
      const bool beyond_pr = orient(P(p), P(r), P(z)) == -q_side_of_pr;
      const bool beyond_qr = orient(P(q), P(r), P(z)) == -p_side_of_qr;
      if (beyond_pr && beyond_qr) both.push_back(z);
      else if (beyond_pr) left.push_back(z);
      else if (beyond_qr) right.push_back(z);
      else invariant("triangle on the split point is not empty");
    }
    if (left.size() > n_left || left.size() + both.size() < n_left) invariant("no separating line through the split point");

    // Points behind r move from p's side to q's side as the separating line
    // turns from r-p to r-q; those closest to direction r - q stay with p longest.
    const int toward_p = orient(P(r), P(q), P(p));
    std::sort(both.begin(), both.end(), [&](Index a, Index b) { return orient(P(r), P(a), P(b)) == toward_p; });
    const std::size_t take = n_left - left.size();
    left.insert(left.end(), both.begin(), both.begin() + static_cast<std::ptrdiff_t>(take));
    right.insert(right.end(), both.begin() + static_cast<std::ptrdiff_t>(take), both.end());

    for (Index z : left)
      if (orient(P(p), P(r), P(z)) == q_side_of_pr) invariant("p-r is not a hull edge of its subproblem");
    for (Index z : right)
      if (orient(P(q), P(r), P(z)) == p_side_of_qr) invariant("r-q is not a hull edge of its subproblem");
    if (!separated(p, q, r, left, right)) invariant("subproblems are not separated by a line through the split point");

    assignment[static_cast<std::size_t>(at(w))] = r;
    solve(s, w, p, r, std::move(left));
    solve(w, t, r, q, std::move(right));
  }
};

}  // namespace

std::vector<int> embed_outerplanar_on_points(const Layer& maximal, const std::vector<GridPoint>& points) {
  const int k = static_cast<int>(points.size());
  if (!maximal.outer_cycle) throw GraphError("outerplanar embedding needs the outer cycle");
  if (static_cast<int>(maximal.outer_cycle->size()) != k) {
    throw InputMismatchError("layer has " + std::to_string(maximal.outer_cycle->size()) + " vertices but " +
                             std::to_string(k) + " points were given");
  }
  validate_layer(maximal, k);
  require_distinct(points);
  if (auto t = find_collinear_triple(points)) {
    throw InputMismatchError("points " + std::to_string(t->i) + ", " + std::to_string(t->j) + ", " + std::to_string(t->k) +
                             " are collinear");
  }
  if (!maximalize_outerplanar(maximal, k).dummy_edges.empty()) {
    throw GraphError("layer is not maximal outerplanar over its outer cycle");
  }

  const auto& cycle = *maximal.outer_cycle;
  std::vector<int> assignment(static_cast<std::size_t>(k), -1);
  if (k == 0) return assignment;
  if (k == 1) {
    assignment[cycle[0]] = 0;
    return assignment;
  }
  if (k == 2) {
    const int lo = points[0] < points[1] ? 0 : 1;
    assignment[cycle[0]] = lo;
    assignment[cycle[1]] = 1 - lo;
    return assignment;
  }

  const auto hull = convex_hull(points);
  const Index low = static_cast<Index>(hull.front());
  const Index nb1 = static_cast<Index>(hull[1]), nb2 = static_cast<Index>(hull.back());
  const Index mate = points[nb1] < points[nb2] ? nb1 : nb2;

  Splitter sp{points, cycle, {}, std::move(assignment)};
  for (const auto& e : maximal.edges) sp.adjacent.insert(Splitter::key(e.u, e.v));
  sp.assignment[cycle[0]] = low;
  sp.assignment[cycle[1]] = mate;
  std::vector<Index> rest;
  for (Index i = 0; i < k; ++i)
    if (i != low && i != mate) rest.push_back(i);
  // Polygon c_1, c_2, ..., c_{k-1}, c_k = c_0 on base edge (mate, low).
  sp.solve(1, k, mate, low, std::move(rest));
  return std::move(sp.assignment);
}

std::optional<std::vector<int>> brute_force_point_assignment(const Layer& layer, const std::vector<GridPoint>& points) {
  const int k = static_cast<int>(points.size());
  if (k > kBruteForceLimit) {
    throw BudgetExceededError("brute force is limited to " + std::to_string(kBruteForceLimit) + " points");
  }
  validate_layer(layer, k);
  require_distinct(points);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  const auto& edges = layer.edges;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i)
      for (std::size_t j = i + 1; j < edges.size() && ok; ++j) {
        const Segment a{points[perm[edges[i].u]], points[perm[edges[i].v]]};
        const Segment b{points[perm[edges[j].u]], points[perm[edges[j].v]]};
        ok = !segments_conflict(a, b);
      }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace simembed
