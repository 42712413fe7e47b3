#pragma once

#include <optional>
#include <vector>

#include "simembed/embedding.hpp"

namespace simembed {

/// Shift-method drawing of a triangulated plane layer: canonical ordering
/// (lowest eligible index first), then x in [0, 2n-4], y in [0, n-2]. The
/// outer triangle is the face right of the dart 0 -> rotation[0][0],
/// so the drawing realises the rotation counterclockwise.
std::vector<GridPoint> planar_grid_draw(const Layer& triangulated, int n);

struct GeneralPositionDrawing {
  std::vector<GridPoint> coords;  // translated so the minimum corner is (1,1)
  Coord sigma = 0;                // safety scale applied before refinement
  Coord width = 0;                // columns allowed, see general_position_bounds
  Coord height = 0;
};

// sigma = 6n. Allowed extents (max - min) are sigma (2n-4)(2n+1) + 2n by
// sigma (n-2)(2n^2+1) + 2n^2; width and height hold those plus one, i.e. the
// number of grid columns and rows. `coords` is left empty.
GeneralPositionDrawing general_position_bounds(int n);

/// Crossing-free drawing of a plane layer with no three vertices collinear.
GeneralPositionDrawing planar_general_position_draw(const Layer& plane, int n);

struct ParabolaSet {
  Coord p = 0;
  std::vector<GridPoint> points;  // (t, t^2 mod p), t = 1..n
};

bool is_prime(Coord v);
ParabolaSet parabola_pointset(int n);

/// Maps a maximal outerplanar layer (with outer cycle) onto points in general
/// position so that its straight-line drawing is crossing-free. Returns
/// vertex -> point index.
std::vector<int> embed_outerplanar_on_points(const Layer& maximal, const std::vector<GridPoint>& points);

inline constexpr int kBruteForceLimit = 9;

/// Lexicographically first crossing-free bijection, by exhaustive search.
std::optional<std::vector<int>> brute_force_point_assignment(const Layer& layer, const std::vector<GridPoint>& points);

/// Layer 0 = the planar graph, layer 1 = the outerplanar one. In the result,
/// assignments[0] is the identity and assignments[1] maps the outerplanar
/// vertices onto the planar graph's vertices (= points).
SimultaneousEmbedding simul_embed_planar_outerplanar(const Layer& plane, const Layer& outerplanar, int n);

/// Every layer on the shared parabola set (translated by +1 in y).
SimultaneousEmbedding simul_embed_outerplanars(const std::vector<Layer>& layers, int n);

}  // namespace simembed
