#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace simembed {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

// Counterclockwise neighbour order around every vertex.
using Rotation = std::vector<std::vector<Vertex>>;

enum class LayerClass { kPath, kCaterpillar, kOuterplanar, kPlanar };
enum class MappingMode { kGiven, kFree };

const char* to_string(LayerClass c);
const char* to_string(MappingMode m);

struct Layer {
  LayerClass clazz = LayerClass::kPath;
  EdgeList edges;
  std::optional<Rotation> rotation;
  std::optional<std::vector<Vertex>> outer_cycle;

  friend bool operator==(const Layer&, const Layer&) = default;
};

struct LayeredInstance {
  int n = 0;
  std::vector<std::string> vertex_labels;  // empty means "use indices"
  std::vector<Layer> layers;
  MappingMode mapping = MappingMode::kGiven;

  friend bool operator==(const LayeredInstance&, const LayeredInstance&) = default;
};

/// Throws GraphError unless the layer is simple, in range and carries the
/// auxiliary data its class requires. Rotation and outer cycle, when present,
/// must be consistent with the edge list.
void validate_layer(const Layer& layer, int n);
void validate_instance(const LayeredInstance& inst);

struct PathOrder {
  std::vector<Vertex> order;

  friend bool operator==(const PathOrder&, const PathOrder&) = default;
};

EdgeList path_edges(const PathOrder& p);

struct Caterpillar {
  std::vector<Vertex> spine;
  std::vector<std::vector<Vertex>> legs;  // legs[i] hang off spine[i]

  std::size_t vertex_count() const;
  std::size_t leg_count() const;
  EdgeList edges() const;
  // Throws GraphError if some vertex is missing or repeated.
  void validate(int n) const;

  friend bool operator==(const Caterpillar&, const Caterpillar&) = default;
};

/// Linear order of a path layer, starting at its lower-indexed endpoint.
PathOrder as_path(const Layer& layer, int n);

/// Spine = tree minus its leaves (for n <= 2, the lowest vertex); legs in
/// input edge order.
Caterpillar caterpillar_decompose(const Layer& layer, int n);

/// P(C): each spine vertex followed by its legs.
PathOrder caterpillar_to_path(const Caterpillar& c);

std::vector<std::vector<Vertex>> adjacency(const EdgeList& edges, int n);
bool is_connected(const EdgeList& edges, int n);

/// Face boundaries of a rotation system. Dart u->v is followed by
/// v->w where w precedes u in v's counterclockwise order.
std::vector<std::vector<Vertex>> trace_faces(const Rotation& rotation);

/// Verifies V - E + F = 2 on a connected layer with a rotation; returns F.
int check_plane_embedding(const Layer& layer, int n);

struct Augmented {
  Layer layer;
  EdgeList dummy_edges;
};

/// Adds edges inside faces until every face is a triangle (3n - 6 edges),
/// never creating a parallel edge.
Augmented triangulate_plane(const Layer& layer, int n);

/// Completes an outerplanar layer to a maximal outerplanar graph (2n - 3
/// edges) over its declared outer cycle. With allow_missing_cycle_edges
/// the cycle edges absent from the input are added as dummies too;
/// otherwise their absence raises MissingCycleEdgeError.
Augmented maximalize_outerplanar(const Layer& layer, int n, bool allow_missing_cycle_edges = false);

}  // namespace simembed
