#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simembed/embedding.hpp"

namespace simembed {

/// Vertex v goes to (1-based position in p1, 1-based position in p2) on an
/// n x n grid. Layer 0 is x-monotone, layer 1 is y-monotone.
SimultaneousEmbedding embed_two_paths(const PathOrder& p1, const PathOrder& p2);

// Cell dimensions used by refine_general_position for a base extent n.
struct RefinementCell {
  Coord width;   // 2n + 1
  Coord height;  // 2n^2 + 1
  Coord half_width() const { return width / 2; }
  Coord half_height() const { return height / 2; }
};

RefinementCell refinement_cell(Coord base_extent);

/// Scales x by 2N+1 and y by 2N^2+1 (N = max(base_extent, |points|)) and
/// moves every point inside its own cell so that no three are collinear.
/// Cells are scanned row by row outward from the centre; the first slot
/// not collinear with any pair of earlier points wins.
std::vector<GridPoint> refine_general_position(const std::vector<GridPoint>& points, Coord base_extent);

/// Two caterpillars on an n(2n+1) x n(2n^2+1) grid via their P(C) orders.
SimultaneousEmbedding embed_two_caterpillars(const Caterpillar& c1, const Caterpillar& c2);

struct PathCaterpillarEmbedding {
  SimultaneousEmbedding embedding;  // layer 0 = path, layer 1 = caterpillar
  int shifts = 0;
};

/// Spine vertex v at (2 o_c(v), o_p(v)), leg at (2 o_c(parent) + 1, o_p(v));
/// right shifts clear legs collinear with consecutive spine vertices.
PathCaterpillarEmbedding embed_path_caterpillar(const PathOrder& p, const Caterpillar& c);

// ---- five paths on K5 ----

struct EdgePair {
  Edge a;  // a.u < a.v, and a < b lexicographically
  Edge b;
};

std::string to_string(const EdgePair& pair);  // "12-45", 1-based

struct PairCoverage {
  std::array<EdgePair, 15> pairs;
  std::array<std::vector<int>, 15> covered_by;  // indices into the path list

  bool all_covered() const;
  int covered_count() const;
  // Pairs covered by path i.
  std::vector<int> pairs_of(int path) const;
};

/// The 15 vertex-disjoint edge pairs of K5 in lexicographic order.
std::array<EdgePair, 15> k5_disjoint_pairs();

PairCoverage five_path_pair_coverage(const std::vector<PathOrder>& paths);

// 12345, 13542, 25134, 32415, 35214 as 0-based orders.
std::vector<PathOrder> standard_five_paths();

PathOrder path_from_digits(const std::string& digits);

struct FivePointSearch {
  Coord grid_width = 5;   // points x in [0, grid_width)
  Coord grid_height = 5;  // points y in [0, grid_height)
  int threads = 0;        // 0 = hardware concurrency
  std::uint64_t samples = 0;  // placements sampled when the grid exceeds the exhaustive budget
  std::uint64_t seed = 1;
};

inline constexpr Coord kExhaustiveGridLimit = 8;

struct FivePointVerdict {
  bool exhaustive = true;
  // Some 5 grid points are in general position at all.
  bool general_position_exists = false;
  // A general-position placement (vertex -> point) where no path self-conflicts.
  std::optional<std::array<GridPoint, 5>> counterexample;
  std::uint64_t nodes = 0;  // partial placements visited (or samples drawn)

  bool vacuous() const { return !general_position_exists; }
};

/// Checks every labelled general-position placement of the 5 vertices on the
/// grid (or `samples` random ones beyond the exhaustive budget). The first
/// counterexample in enumeration order is returned independent of threads.
FivePointVerdict exhaustive_five_point_check(const std::vector<PathOrder>& paths, const FivePointSearch& search);

}  // namespace simembed
