#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simembed/embedding.hpp"

namespace simembed {

enum class ViolationKind { kLayerCrossing, kCollinearTriple, kOutOfBounds, kDuplicatePoint, kBadBijection };

const char* to_string(ViolationKind k);
std::optional<ViolationKind> violation_kind_from_string(const std::string& s);

// Witness layout per kind:
//   layer-crossing   layer, edge index, edge index
//   collinear-triple point, point, point
//   out-of-bounds    point
//   duplicate-point  point, point
//   bad-bijection    layer, vertex (or -1 when the whole map is missing/short)
struct Violation {
  ViolationKind kind;
  std::vector<long long> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CertificateReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    ok = false;
    violations.push_back(std::move(v));
  }
  void merge(const CertificateReport& other) {
    for (const auto& v : other.violations) add(v);
  }

  friend bool operator==(const CertificateReport&, const CertificateReport&) = default;
};

struct Bounds {
  Coord width;
  Coord height;
};

/// Checks the drawing of every instance layer on `e`'s points: pairwise edge
/// conflicts within a layer (never across layers), distinct points, the
/// optional bounds and, in free mapping mode, every layer's bijection. Edge
/// lists come from `inst`. Throws InputMismatchError only on arity mismatch.
CertificateReport certify_embedding(const SimultaneousEmbedding& e, const LayeredInstance& inst,
                                    std::optional<Bounds> bounds = std::nullopt);

/// First collinear triple, or every one with full_scan.
CertificateReport certify_general_position(const std::vector<GridPoint>& points, bool full_scan = false);

/// All points inside [1,w] x [1,h] once the minimum corner is moved to (1,1).
CertificateReport certify_bounds(const SimultaneousEmbedding& e, Coord width, Coord height);

}  // namespace simembed
