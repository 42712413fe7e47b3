#pragma once

#include <optional>
#include <vector>

#include "simembed/geom.hpp"
#include "simembed/graph.hpp"

namespace simembed {

// Per layer, vertex v of that layer sits on point assignment[layer][v].
using PointAssignment = std::vector<std::vector<int>>;

/// A drawing of every layer on one shared point list. In given-mapping mode
/// vertex v sits on coords[v]; in free mode `assignments` places each layer.
struct SimultaneousEmbedding {
  std::vector<GridPoint> coords;
  std::vector<EdgeList> layers;
  Coord width = 0;
  Coord height = 0;
  std::optional<PointAssignment> assignments;

  // Position of vertex v of layer `layer`.
  const GridPoint& at(std::size_t layer, Vertex v) const {
    return assignments ? coords[static_cast<std::size_t>((*assignments)[layer][v])] : coords[static_cast<std::size_t>(v)];
  }
};

}  // namespace simembed
