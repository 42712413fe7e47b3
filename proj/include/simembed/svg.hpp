#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simembed/embedding.hpp"

namespace simembed {

struct LayerStyle {
  std::string stroke;  // empty = palette colour for the layer index
  double width = 2.0;
  std::string dasharray;  // empty = solid
};

struct SvgStyle {
  std::vector<LayerStyle> layers;  // missing entries use defaults
  double canvas = 800.0;           // longer side of the drawing area
  double margin = 40.0;
  double vertex_radius = 6.0;
  bool keep_aspect = false;        // stretch each axis to the canvas by default
};

/// Default colour for layer i (eight distinct colours, then repeats).
const char* palette_colour(std::size_t layer);

/// SVG 1.1 with one <g class="layer"> of <line>s per layer followed by one
/// group of labelled vertex circles. Larger y is drawn higher. Labels are per
/// point; when empty, point indices are used.
std::string render_svg(const SimultaneousEmbedding& e, const SvgStyle& style = {},
                       const std::vector<std::string>& labels = {});

}  // namespace simembed
