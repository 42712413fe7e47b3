#include "simembed/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace simembed {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

const char* palette_colour(std::size_t layer) { return kPalette[layer % kPalette.size()]; }

std::string render_svg(const SimultaneousEmbedding& e, const SvgStyle& style, const std::vector<std::string>& labels) {
  Coord min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  if (!e.coords.empty()) {
    min_x = max_x = e.coords[0].x;
    min_y = max_y = e.coords[0].y;
  }
  for (const auto& p : e.coords) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span_x = static_cast<double>(std::max<Coord>(max_x - min_x, 1));
  const double span_y = static_cast<double>(std::max<Coord>(max_y - min_y, 1));
  double sx = style.canvas / span_x;
  double sy = style.canvas / span_y;
  if (style.keep_aspect) sx = sy = std::min(sx, sy);
  const double w = sx * span_x + 2 * style.margin;
  const double h = sy * span_y + 2 * style.margin;

  auto px = [&](const GridPoint& p) { return style.margin + sx * static_cast<double>(p.x - min_x); };
  auto py = [&](const GridPoint& p) { return h - style.margin - sy * static_cast<double>(p.y - min_y); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\"" << num(h)
      << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t l = 0; l < e.layers.size(); ++l) {
    LayerStyle ls = l < style.layers.size() ? style.layers[l] : LayerStyle{};
    const std::string stroke = ls.stroke.empty() ? palette_colour(l) : ls.stroke;
    out << "<g id=\"layer-" << l << "\" class=\"layer\" stroke=\"" << escape(stroke) << "\" stroke-width=\""
        << num(ls.width) << "\" stroke-linecap=\"round\" fill=\"none\"";
    if (!ls.dasharray.empty()) out << " stroke-dasharray=\"" << escape(ls.dasharray) << '"';
    out << ">\n";
    for (const auto& edge : e.layers[l]) {
      const GridPoint& a = e.at(l, edge.u);
      const GridPoint& b = e.at(l, edge.v);
      out << "<line x1=\"" << num(px(a)) << "\" y1=\"" << num(py(a)) << "\" x2=\"" << num(px(b)) << "\" y2=\""
          << num(py(b)) << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<g id=\"vertices\" class=\"vertices\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    const auto& p = e.coords[i];
    const std::string label = i < labels.size() ? labels[i] : std::to_string(i);
    out << "<circle cx=\"" << num(px(p)) << "\" cy=\"" << num(py(p)) << "\" r=\"" << num(style.vertex_radius)
        << "\" fill=\"white\" stroke=\"black\"/>\n"
        << "<text x=\"" << num(px(p) + style.vertex_radius + 2) << "\" y=\"" << num(py(p) - style.vertex_radius - 2)
        << "\">" << escape(label) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace simembed
