#include "simembed/generate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "simembed/error.hpp"

namespace simembed {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InternalError("draw_below with empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return r % bound;
}

namespace {

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw_below(rng, i)]);
}

void scramble_edges(EdgeList& edges, std::mt19937_64& rng) {
  shuffle(edges, rng);
  for (auto& e : edges)
    if (rng() & 1) std::swap(e.u, e.v);
}

Layer gen_path(int n, std::mt19937_64& rng) {
  Layer l{LayerClass::kPath, path_edges({random_permutation(n, rng)}), std::nullopt, std::nullopt};
  return l;
}

Layer gen_caterpillar(int n, std::mt19937_64& rng) {
  Layer l;
  l.clazz = LayerClass::kCaterpillar;
  if (n <= 1) return l;
  const auto label = random_permutation(n, rng);
  const int spine = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n)));
  for (int i = 1; i < spine; ++i) l.edges.push_back({label[i - 1], label[i]});
  for (int v = spine; v < n; ++v) l.edges.push_back({label[draw_below(rng, static_cast<std::uint64_t>(spine))], label[v]});
  scramble_edges(l.edges, rng);
  return l;
}

void triangulate_polygon(const std::vector<int>& cycle, int lo, int hi, EdgeList& out, std::mt19937_64& rng) {
  if (hi - lo < 2) return;
  const int apex = lo + 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(hi - lo - 1)));
  if (apex - lo > 1) out.push_back({cycle[lo], cycle[apex]});
  if (hi - apex > 1) out.push_back({cycle[apex], cycle[hi]});
  triangulate_polygon(cycle, lo, apex, out, rng);
  triangulate_polygon(cycle, apex, hi, out, rng);
}

Layer gen_outerplanar(int n, std::mt19937_64& rng) {
  Layer l;
  l.clazz = LayerClass::kOuterplanar;
  const auto cycle = random_permutation(n, rng);
  for (int i = 1; i < n; ++i) l.edges.push_back({cycle[i - 1], cycle[i]});
  if (n >= 3) l.edges.push_back({cycle[n - 1], cycle[0]});
  triangulate_polygon(cycle, 0, n - 1, l.edges, rng);
  scramble_edges(l.edges, rng);
  l.outer_cycle = cycle;
  return l;
}

void insert_after(std::vector<Vertex>& ring, Vertex anchor, Vertex v) {
  auto it = std::find(ring.begin(), ring.end(), anchor);
  ring.insert(it + 1, v);
}

void erase(std::vector<Vertex>& ring, Vertex v) { ring.erase(std::find(ring.begin(), ring.end(), v)); }

Vertex prev_ccw(const std::vector<Vertex>& ring, Vertex v) {
  auto it = std::find(ring.begin(), ring.end(), v);
  return it == ring.begin() ? ring.back() : *(it - 1);
}

Layer gen_triangulation(int n, std::mt19937_64& rng) {
  if (n < 3) throw GraphError("a plane triangulation needs at least 3 vertices");
  Rotation rot(static_cast<std::size_t>(n));
  rot[0] = {1, 2};
  rot[1] = {2, 0};
  rot[2] = {0, 1};
  // Faces as counterclockwise triples; both sides of the first triangle.
  std::vector<std::array<Vertex, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
  for (Vertex v = 3; v < n; ++v) {
    const std::size_t f = draw_below(rng, faces.size());
    const auto [a, b, c] = faces[f];
    // Inside face a,b,c the new vertex sits between the two face edges at each corner.
    insert_after(rot[a], b, v);
    insert_after(rot[b], c, v);
    insert_after(rot[c], a, v);
    rot[v] = {a, b, c};
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }

  std::set<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : rot[v]) edges.insert({std::min(v, w), std::max(v, w)});

  const int flips = 2 * n;
  for (int t = 0; t < flips; ++t) {
    auto it = edges.begin();
    std::advance(it, static_cast<long>(draw_below(rng, edges.size())));
    const auto [a, b] = *it;
    const Vertex c = prev_ccw(rot[b], a);  // face a,b,c
    const Vertex d = prev_ccw(rot[a], b);  // face b,a,d
    if (c == d || rot[a].size() <= 3 || rot[b].size() <= 3) continue;
    if (edges.count({std::min(c, d), std::max(c, d)})) continue;
    erase(rot[a], b);
    erase(rot[b], a);
    insert_after(rot[c], a, d);
    insert_after(rot[d], b, c);
    edges.erase(it);
    edges.insert({std::min(c, d), std::max(c, d)});
  }

  const auto label = random_permutation(n, rng);
  Rotation relabelled(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto& ring = relabelled[label[v]];
    for (Vertex w : rot[v]) ring.push_back(label[w]);
    std::rotate(ring.begin(), ring.begin() + static_cast<long>(draw_below(rng, ring.size())), ring.end());
  }
  Layer l;
  l.clazz = LayerClass::kPlanar;
  for (const auto& [u, w] : edges) l.edges.push_back({label[u], label[w]});
  scramble_edges(l.edges, rng);
  l.rotation = std::move(relabelled);
  return l;
}

}  // namespace

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(p.begin(), p.end(), 0);
  shuffle(p, rng);
  return p;
}

const char* to_string(GenKind k) {
  switch (k) {
    case GenKind::kPath: return "path";
    case GenKind::kCaterpillar: return "caterpillar";
    case GenKind::kMaximalOuterplanar: return "maximal-outerplanar";
    case GenKind::kPlaneTriangulation: return "plane-triangulation";
  }
  return "?";
}

std::optional<GenKind> gen_kind_from_string(const std::string& s) {
  for (auto k : {GenKind::kPath, GenKind::kCaterpillar, GenKind::kMaximalOuterplanar, GenKind::kPlaneTriangulation})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

Layer generate(GenKind kind, int n, std::uint64_t seed) {
  if (n < 0) throw GraphError("negative vertex count");
  std::mt19937_64 rng(seed);
  switch (kind) {
    case GenKind::kPath: return gen_path(n, rng);
    case GenKind::kCaterpillar: return gen_caterpillar(n, rng);
    case GenKind::kMaximalOuterplanar: return gen_outerplanar(n, rng);
    case GenKind::kPlaneTriangulation: return gen_triangulation(n, rng);
  }
  throw InternalError("unknown generator kind");
}

}  // namespace simembed
