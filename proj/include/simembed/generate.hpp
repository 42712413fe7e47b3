#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "simembed/graph.hpp"

namespace simembed {

enum class GenKind { kPath, kCaterpillar, kMaximalOuterplanar, kPlaneTriangulation };

const char* to_string(GenKind k);
std::optional<GenKind> gen_kind_from_string(const std::string& s);

/// Random layer of the given kind on vertices 0..n-1. Depends only on
/// (kind, n, seed). Plane triangulations need n >= 3 and carry a rotation;
/// maximal outerplanar layers carry their outer cycle.
Layer generate(GenKind kind, int n, std::uint64_t seed);

// Uniform draws that do not depend on the standard library's distributions,
// so seeds reproduce across toolchains.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

}  // namespace simembed
