#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace simembed {

using Coord = std::int64_t;

// Largest accepted coordinate magnitude. Differences fit in 42 bits and
// products in 84, so every predicate is exact with 128-bit intermediates.
inline constexpr Coord kCoordinateBudget = Coord{1} << 40;

struct GridPoint {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

struct Segment {
  GridPoint a;
  GridPoint b;
};

// Throws CoordinateBudgetError if |x| or |y| exceeds kCoordinateBudget.
void check_budget(const GridPoint& p);

/// Sign of (b - a) x (c - a): +1 counterclockwise, 0 collinear, -1 clockwise.
int orient(const GridPoint& a, const GridPoint& b, const GridPoint& c);

/// True iff the closed segments share a point other than one common endpoint.
/// Proper crossings, collinear overlap and an endpoint touching the other
/// segment's interior all count. Throws DegenerateSegmentError if a == b.
bool segments_conflict(const Segment& s1, const Segment& s2);

struct Triple {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  friend constexpr bool operator==(const Triple&, const Triple&) = default;
};

/// Lexicographically smallest collinear index triple, if any.
std::optional<Triple> find_collinear_triple(std::span<const GridPoint> points);

/// Every collinear triple in lexicographic order.
std::vector<Triple> all_collinear_triples(std::span<const GridPoint> points);

/// Indices of the strict convex hull in counterclockwise order, starting at
/// the lexicographically smallest point. Needs >= 3 distinct points.
std::vector<std::size_t> convex_hull(std::span<const GridPoint> points);

// Throws DuplicatePointError naming the first repeated pair.
void require_distinct(std::span<const GridPoint> points);

}  // namespace simembed
