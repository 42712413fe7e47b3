#include "simembed/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "simembed/error.hpp"

namespace simembed {

namespace {

std::string edge_str(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

std::uint64_t key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t(std::uint32_t(a)) << 32) | std::uint32_t(b);
}

class EdgeSet {
 public:
  explicit EdgeSet(const EdgeList& edges) {
    for (const auto& e : edges) keys_.insert(key(e.u, e.v));
  }
  bool contains(Vertex a, Vertex b) const { return keys_.count(key(a, b)) != 0; }
  void insert(Vertex a, Vertex b) { keys_.insert(key(a, b)); }

 private:
  std::unordered_set<std::uint64_t> keys_;
};

std::size_t index_of(const std::vector<Vertex>& list, Vertex v) {
  auto it = std::find(list.begin(), list.end(), v);
  if (it == list.end()) throw GraphError("rotation is missing neighbour " + std::to_string(v));
  return static_cast<std::size_t>(it - list.begin());
}

void check_rotation(const Rotation& rot, const EdgeList& edges, int n) {
  if (static_cast<int>(rot.size()) != n) {
    throw GraphError("rotation has " + std::to_string(rot.size()) + " entries, expected " + std::to_string(n));
  }
  auto adj = adjacency(edges, n);
  for (int v = 0; v < n; ++v) {
    auto a = adj[v];
    auto r = rot[v];
    std::sort(a.begin(), a.end());
    std::sort(r.begin(), r.end());
    if (a != r) throw GraphError("rotation at vertex " + std::to_string(v) + " does not match its neighbours");
  }
}

void check_permutation(const std::vector<Vertex>& order, int n, const char* what) {
  if (static_cast<int>(order.size()) != n) {
    throw GraphError(std::string(what) + " has " + std::to_string(order.size()) + " entries, expected " +
                     std::to_string(n));
  }
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) throw GraphError(std::string(what) + " is not a permutation of 0..n-1");
    seen[v] = 1;
  }
}

}  // namespace

const char* to_string(LayerClass c) {
  switch (c) {
    case LayerClass::kPath: return "path";
    case LayerClass::kCaterpillar: return "caterpillar";
    case LayerClass::kOuterplanar: return "outerplanar";
    case LayerClass::kPlanar: return "planar";
  }
  return "?";
}

const char* to_string(MappingMode m) { return m == MappingMode::kGiven ? "given" : "free"; }

std::vector<std::vector<Vertex>> adjacency(const EdgeList& edges, int n) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

bool is_connected(const EdgeList& edges, int n) {
  if (n <= 1) return true;
  auto adj = adjacency(edges, n);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

void validate_layer(const Layer& layer, int n) {
  if (n < 0) throw GraphError("negative vertex count");
  EdgeSet seen({});
  for (const auto& e : layer.edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw GraphError("edge " + edge_str(e) + " out of range");
    if (e.u == e.v) throw GraphError("loop " + edge_str(e));
    if (seen.contains(e.u, e.v)) throw GraphError("duplicate edge " + edge_str(e));
    seen.insert(e.u, e.v);
  }
  if (layer.clazz == LayerClass::kPlanar && !layer.rotation) throw GraphError("planar layer requires a rotation");
  if (layer.clazz == LayerClass::kOuterplanar && !layer.outer_cycle) {
    throw GraphError("outerplanar layer requires an outer cycle");
  }
  if (layer.rotation) check_rotation(*layer.rotation, layer.edges, n);
  if (layer.outer_cycle) check_permutation(*layer.outer_cycle, n, "outer cycle");
}

void validate_instance(const LayeredInstance& inst) {
  if (inst.n < 0) throw GraphError("negative vertex count");
  if (!inst.vertex_labels.empty() && static_cast<int>(inst.vertex_labels.size()) != inst.n) {
    throw GraphError("expected " + std::to_string(inst.n) + " vertex labels");
  }
  for (std::size_t i = 0; i < inst.layers.size(); ++i) {
    try {
      validate_layer(inst.layers[i], inst.n);
    } catch (const GraphError& e) {
      throw GraphError("layer " + std::to_string(i) + ": " + e.what());
    }
  }
}

EdgeList path_edges(const PathOrder& p) {
  EdgeList out;
  for (std::size_t i = 1; i < p.order.size(); ++i) out.push_back({p.order[i - 1], p.order[i]});
  return out;
}

std::size_t Caterpillar::vertex_count() const { return spine.size() + leg_count(); }

std::size_t Caterpillar::leg_count() const {
  std::size_t k = 0;
  for (const auto& l : legs) k += l.size();
  return k;
}

EdgeList Caterpillar::edges() const {
  EdgeList out;
  for (std::size_t i = 1; i < spine.size(); ++i) out.push_back({spine[i - 1], spine[i]});
  for (std::size_t i = 0; i < spine.size(); ++i)
    for (Vertex l : legs[i]) out.push_back({spine[i], l});
  return out;
}

void Caterpillar::validate(int n) const {
  if (legs.size() != spine.size()) throw GraphError("caterpillar needs one leg list per spine vertex");
  if (n > 0 && spine.empty()) throw GraphError("caterpillar spine is empty");
  std::vector<Vertex> all(spine);
  for (const auto& l : legs) all.insert(all.end(), l.begin(), l.end());
  check_permutation(all, n, "caterpillar vertex set");
}

PathOrder as_path(const Layer& layer, int n) {
  if (n <= 0) throw NotAPathError("empty vertex set");
  if (static_cast<int>(layer.edges.size()) != n - 1) {
    throw NotAPathError("a path on " + std::to_string(n) + " vertices has " + std::to_string(n - 1) + " edges, got " +
                        std::to_string(layer.edges.size()));
  }
  validate_layer(layer, n);
  if (n == 1) return {{0}};
  auto adj = adjacency(layer.edges, n);
  Vertex start = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (adj[v].size() > 2) throw NotAPathError("vertex " + std::to_string(v) + " has degree " + std::to_string(adj[v].size()));
    if (adj[v].size() == 1 && start < 0) start = v;
  }
  if (start < 0) throw NotAPathError("no endpoint: the layer is a cycle");
  PathOrder p;
  Vertex prev = -1, cur = start;
  while (cur >= 0) {
    p.order.push_back(cur);
    Vertex next = -1;
    for (Vertex w : adj[cur])
      if (w != prev) next = w;
    prev = cur;
    cur = next;
    if (static_cast<int>(p.order.size()) > n) throw NotAPathError("cycle detected");
  }
  if (static_cast<int>(p.order.size()) != n) throw NotAPathError("layer is disconnected");
  return p;
}

Caterpillar caterpillar_decompose(const Layer& layer, int n) {
  if (n <= 0) throw NotATreeError("empty vertex set");
  validate_layer(layer, n);
  if (static_cast<int>(layer.edges.size()) != n - 1 || !is_connected(layer.edges, n)) {
    throw NotATreeError("layer is not a tree");
  }
  if (n == 1) return {{0}, {{}}};
  if (n == 2) {
    const Vertex lo = std::min(layer.edges[0].u, layer.edges[0].v);
    return {{lo}, {{lo == 0 ? 1 : 0}}};
  }
  auto adj = adjacency(layer.edges, n);
  auto is_leaf = [&](Vertex v) { return adj[v].size() == 1; };

  std::vector<int> inner_degree(n, 0);
  Vertex endpoint = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (is_leaf(v)) continue;
    for (Vertex w : adj[v])
      if (!is_leaf(w)) ++inner_degree[v];
    if (inner_degree[v] > 2) {
      throw NotACaterpillarError("vertex " + std::to_string(v) + " branches after removing leaves");
    }
    if (inner_degree[v] <= 1 && endpoint < 0) endpoint = v;
  }

  Caterpillar c;
  std::vector<int> slot(n, -1);
  Vertex prev = -1, cur = endpoint;
  while (cur >= 0) {
    slot[cur] = static_cast<int>(c.spine.size());
    c.spine.push_back(cur);
    Vertex next = -1;
    for (Vertex w : adj[cur])
      if (w != prev && !is_leaf(w)) next = w;
    prev = cur;
    cur = next;
  }
  c.legs.resize(c.spine.size());
  for (const auto& e : layer.edges) {
    if (is_leaf(e.v)) c.legs[slot[e.u]].push_back(e.v);
    else if (is_leaf(e.u)) c.legs[slot[e.v]].push_back(e.u);
  }
  return c;
}

PathOrder caterpillar_to_path(const Caterpillar& c) {
  PathOrder p;
  for (std::size_t i = 0; i < c.spine.size(); ++i) {
    p.order.push_back(c.spine[i]);
    p.order.insert(p.order.end(), c.legs[i].begin(), c.legs[i].end());
  }
  return p;
}

std::vector<std::vector<Vertex>> trace_faces(const Rotation& rot) {
  const std::size_t n = rot.size();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + rot[v].size();
  std::vector<char> used(offset[n], 0);

  std::vector<std::vector<Vertex>> faces;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < rot[v].size(); ++i) {
      if (used[offset[v] + i]) continue;
      std::vector<Vertex> face;
      Vertex tail = static_cast<Vertex>(v);
      std::size_t idx = i;
      while (!used[offset[tail] + idx]) {
        used[offset[tail] + idx] = 1;
        face.push_back(tail);
        const Vertex head = rot[tail][idx];
        const auto& around = rot[head];
        const std::size_t back = index_of(around, tail);
        idx = (back + around.size() - 1) % around.size();
        tail = head;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

int check_plane_embedding(const Layer& layer, int n) {
  if (!layer.rotation) throw GraphError("plane embedding check requires a rotation");
  validate_layer(layer, n);
  if (!is_connected(layer.edges, n)) throw GraphError("layer is disconnected");
  const int faces = layer.edges.empty() ? 1 : static_cast<int>(trace_faces(*layer.rotation).size());
  const int euler = n - static_cast<int>(layer.edges.size()) + faces;
  if (euler != 2) {
    throw EulerViolationError("V - E + F = " + std::to_string(euler) + " (V=" + std::to_string(n) +
                              ", E=" + std::to_string(layer.edges.size()) + ", F=" + std::to_string(faces) + ")");
  }
  return faces;
}

Augmented triangulate_plane(const Layer& layer, int n) {
  if (n < 3) throw GraphError("triangulation needs at least 3 vertices");
  check_plane_embedding(layer, n);

  Augmented out{layer, {}};
  Rotation& rot = *out.layer.rotation;
  EdgeSet present(layer.edges);

  auto insert_after = [&](Vertex at, Vertex anchor, Vertex added) {
    auto& list = rot[at];
    list.insert(list.begin() + static_cast<std::ptrdiff_t>(index_of(list, anchor) + 1), added);
  };

  // Cut one ear at a time: a_i -> a_{i+1} -> a_{i+2} becomes a triangle.
  for (;;) {
    const auto faces = trace_faces(rot);
    const std::vector<Vertex>* open = nullptr;
    for (const auto& f : faces)
      if (f.size() > 3) {
        open = &f;
        break;
      }
    if (!open) break;
    const auto& f = *open;
    const std::size_t len = f.size();
    bool cut = false;
    for (std::size_t i = 0; i < len && !cut; ++i) {
      const Vertex a = f[i], b = f[(i + 1) % len], c = f[(i + 2) % len], d = f[(i + 3) % len];
      if (a == c || present.contains(a, c)) continue;
      insert_after(a, b, c);
      insert_after(c, d, a);
      present.insert(a, c);
      out.layer.edges.push_back({a, c});
      out.dummy_edges.push_back({a, c});
      cut = true;
    }
    if (!cut) throw InternalError("no admissible diagonal in a face of length " + std::to_string(len));
  }
  return out;
}

Augmented maximalize_outerplanar(const Layer& layer, int n, bool allow_missing_cycle_edges) {
  if (!layer.outer_cycle) throw GraphError("outerplanar layer requires an outer cycle");
  validate_layer(layer, n);
  Augmented out{layer, {}};
  const auto& cycle = *layer.outer_cycle;
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[cycle[i]] = i;

  EdgeSet present(layer.edges);
  auto add = [&](Vertex a, Vertex b) {
    present.insert(a, b);
    out.layer.edges.push_back({a, b});
    out.dummy_edges.push_back({a, b});
  };

  const int cycle_len = n >= 3 ? n : n - 1;
  for (int i = 0; i < cycle_len; ++i) {
    const Vertex a = cycle[i], b = cycle[(i + 1) % n];
    if (present.contains(a, b)) continue;
    if (!allow_missing_cycle_edges) {
      throw MissingCycleEdgeError("outer cycle edge " + edge_str({a, b}) + " is missing");
    }
    add(a, b);
  }
  if (n <= 3) return out;

  // Chords as position pairs (lo, hi); two chords cross iff they interleave.
  std::vector<std::pair<int, int>> chords;
  std::vector<std::vector<int>> chord_at(n);
  for (const auto& e : out.layer.edges) {
    int a = pos[e.u], b = pos[e.v];
    if (a > b) std::swap(a, b);
    if (b - a == 1 || b - a == n - 1) continue;
    chords.emplace_back(a, b);
    chord_at[a].push_back(b);
    chord_at[b].push_back(a);
  }
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const auto [a, b] = chords[i];
      const auto [c, d] = chords[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) {
        throw CrossingChordsError("chords " + edge_str({cycle[a], cycle[b]}) + " and " + edge_str({cycle[c], cycle[d]}) +
                                  " cross with respect to the outer cycle");
      }
    }

  // Split polygons along existing chords; fan-triangulate chordless ones.
  std::vector<std::vector<int>> pending;
  pending.emplace_back(n);
  std::iota(pending.back().begin(), pending.back().end(), 0);
  while (!pending.empty()) {
    std::vector<int> poly = std::move(pending.back());
    pending.pop_back();
    const std::size_t len = poly.size();
    if (len <= 3) continue;
    std::vector<int> where(n, -1);
    for (std::size_t i = 0; i < len; ++i) where[poly[i]] = static_cast<int>(i);

    bool split = false;
    for (std::size_t i = 0; i < len && !split; ++i) {
      for (int other : chord_at[poly[i]]) {
        const int j = where[other];
        if (j < 0) continue;
        const std::size_t lo = std::min<std::size_t>(i, j), hi = std::max<std::size_t>(i, j);
        if (hi - lo == 1 || hi - lo == len - 1) continue;
        pending.emplace_back(poly.begin() + static_cast<std::ptrdiff_t>(lo), poly.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
        std::vector<int> rest(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(lo) + 1);
        rest.insert(rest.end(), poly.begin() + static_cast<std::ptrdiff_t>(hi), poly.end());
        pending.push_back(std::move(rest));
        split = true;
        break;
      }
    }
    if (split) continue;
    for (std::size_t j = 2; j + 1 < len; ++j) add(cycle[poly[0]], cycle[poly[j]]);
  }
  return out;
}

}  // namespace simembed
