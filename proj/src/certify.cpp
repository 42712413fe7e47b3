#include "simembed/certify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "simembed/error.hpp"

namespace simembed {

namespace {

CertificateReport bounds_report(const std::vector<GridPoint>& pts, Coord width, Coord height) {
  CertificateReport r;
  if (pts.empty()) return r;
  Coord min_x = pts.front().x, min_y = pts.front().y;
  for (const auto& p : pts) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Coord x = pts[i].x - min_x + 1, y = pts[i].y - min_y + 1;
    if (x > width || y > height) r.add({ViolationKind::kOutOfBounds, {static_cast<long long>(i)}});
  }
  return r;
}

}  // namespace

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kLayerCrossing: return "layer-crossing";
    case ViolationKind::kCollinearTriple: return "collinear-triple";
    case ViolationKind::kOutOfBounds: return "out-of-bounds";
    case ViolationKind::kDuplicatePoint: return "duplicate-point";
    case ViolationKind::kBadBijection: return "bad-bijection";
  }
  return "?";
}

std::optional<ViolationKind> violation_kind_from_string(const std::string& s) {
  for (auto k : {ViolationKind::kLayerCrossing, ViolationKind::kCollinearTriple, ViolationKind::kOutOfBounds,
                 ViolationKind::kDuplicatePoint, ViolationKind::kBadBijection})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

CertificateReport certify_embedding(const SimultaneousEmbedding& e, const LayeredInstance& inst,
                                    std::optional<Bounds> bounds) {
  const std::size_t n = static_cast<std::size_t>(inst.n);
  if (e.coords.size() != n) {
    throw InputMismatchError("embedding has " + std::to_string(e.coords.size()) + " points, instance has " +
                             std::to_string(n) + " vertices");
  }
  const bool free = inst.mapping == MappingMode::kFree;
  CertificateReport report;

  std::map<GridPoint, std::size_t> first_at;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = first_at.emplace(e.coords[i], i);
    if (!fresh) report.add({ViolationKind::kDuplicatePoint, {static_cast<long long>(it->second), static_cast<long long>(i)}});
  }

  for (std::size_t L = 0; L < inst.layers.size(); ++L) {
    const auto& edges = inst.layers[L].edges;
    std::vector<int> place(n);
    for (std::size_t v = 0; v < n; ++v) place[v] = static_cast<int>(v);

    if (free) {
      const bool missing = !e.assignments || e.assignments->size() <= L || (*e.assignments)[L].size() != n;
      if (missing) {
        report.add({ViolationKind::kBadBijection, {static_cast<long long>(L), -1}});
        continue;
      }
      place = (*e.assignments)[L];
      std::vector<char> hit(n, 0);
      bool bad = false;
      for (std::size_t v = 0; v < n; ++v) {
        const int p = place[v];
        if (p < 0 || static_cast<std::size_t>(p) >= n || hit[p]) {
          report.add({ViolationKind::kBadBijection, {static_cast<long long>(L), static_cast<long long>(v)}});
          bad = true;
          continue;
        }
        hit[p] = 1;
      }
      if (bad) continue;
    }

    std::vector<Segment> segs;
    segs.reserve(edges.size());
    for (const auto& ed : edges) segs.push_back({e.coords[place[ed.u]], e.coords[place[ed.v]]});
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if (segs[i].a == segs[i].b) continue;  // already reported as a duplicate point
      for (std::size_t j = i + 1; j < segs.size(); ++j) {
        if (segs[j].a == segs[j].b) continue;
        if (segments_conflict(segs[i], segs[j])) {
          report.add({ViolationKind::kLayerCrossing,
                      {static_cast<long long>(L), static_cast<long long>(i), static_cast<long long>(j)}});
        }
      }
    }
  }

  if (bounds) report.merge(bounds_report(e.coords, bounds->width, bounds->height));
  return report;
}

CertificateReport certify_general_position(const std::vector<GridPoint>& points, bool full_scan) {
  CertificateReport r;
  auto add = [&](const Triple& t) {
    r.add({ViolationKind::kCollinearTriple,
           {static_cast<long long>(t.i), static_cast<long long>(t.j), static_cast<long long>(t.k)}});
  };
  if (full_scan) {
    for (const auto& t : all_collinear_triples(points)) add(t);
  } else if (auto t = find_collinear_triple(points)) {
    add(*t);
  }
  return r;
}

CertificateReport certify_bounds(const SimultaneousEmbedding& e, Coord width, Coord height) {
  return bounds_report(e.coords, width, height);
}

}  // namespace simembed
