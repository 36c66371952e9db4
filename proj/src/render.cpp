#include "gerst/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gerst {

namespace {

// Cell labels keyed by (x, y); ragged grids leave out cells past the last
// label of each row.
struct Grid {
  std::map<std::pair<int, int>, std::string> cells;
  std::map<std::pair<int, int>, int> values;
  bool ragged = false;
};

Grid plan_grid(const FloorPlan& p) {
  Grid g;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto key = std::pair{p.P[i][0], p.P[i][1]};
    g.values[key] += p.h[i];
    g.cells[key] = std::to_string(g.values[key]);
  }
  return g;
}

Grid height_grid(const HeightMap& h) {
  Grid g;
  g.ragged = true;
  for (int x = 0; x < h.width(); ++x) {
    for (int y = 0; y < h.height(); ++y) {
      if (h(x, y) == 0) continue;
      g.cells[{x, y}] = std::to_string(h(x, y));
      g.values[{x, y}] = h(x, y);
    }
  }
  return g;
}

Grid diagram_grid(const YoungDiagram& d) {
  if (d.dim() != 2) throw Error(ErrorCode::UnsupportedKind, "only 2D diagrams render");
  Grid g;
  g.ragged = true;
  for (const auto& b : d.boxes()) {
    g.cells[{b[0], b[1]}] = "#";
    g.values[{b[0], b[1]}] = 1;
  }
  return g;
}

std::pair<int, int> extent(const Grid& g) {
  int w = 0, h = 0;
  for (const auto& [key, _] : g.cells) {
    w = std::max(w, key.first + 1);
    h = std::max(h, key.second + 1);
  }
  return {w, h};
}

std::string ascii(const Grid& g) {
  if (g.cells.empty()) return "(empty)\n";
  const auto [w, h] = extent(g);
  std::size_t width = 1;
  for (const auto& [_, s] : g.cells) width = std::max(width, s.size());
  std::ostringstream os;
  for (int y = h - 1; y >= 0; --y) {
    int last = w - 1;
    if (g.ragged) {
      last = -1;
      for (int x = 0; x < w; ++x) {
        if (g.cells.count({x, y})) last = x;
      }
    }
    std::string line;
    for (int x = 0; x <= last; ++x) {
      const auto it = g.cells.find({x, y});
      const std::string s = it == g.cells.end() ? "." : it->second;
      if (x > 0) line += ' ';
      line += std::string(width - s.size(), ' ') + s;
    }
    os << line << '\n';
  }
  return os.str();
}

constexpr int kCell = 32;

std::string svg_cells(const Grid& g, int x0, int y0, int h) {
  int top = 1;
  for (const auto& [_, v] : g.values) top = std::max(top, v);
  std::ostringstream os;
  for (const auto& [key, label] : g.cells) {
    const int px = x0 + key.first * kCell;
    const int py = y0 + (h - 1 - key.second) * kCell;
    // Darker cells carry larger values.
    const int shade = 230 - (150 * g.values.at(key)) / top;
    os << "  <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << kCell << "\" height=\"" << kCell
       << "\" fill=\"rgb(" << shade << "," << shade << ",255)\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << px + kCell / 2 << "\" y=\"" << py + kCell / 2 + 5
       << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"14\">" << label << "</text>\n";
  }
  return os.str();
}

std::string svg(const std::vector<Grid>& grids) {
  int total_w = 0, max_h = 0;
  for (const auto& g : grids) {
    const auto [w, h] = extent(g);
    total_w += std::max(w, 1) * kCell + kCell;
    max_h = std::max(max_h, h);
  }
  max_h = std::max(max_h, 1);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w << "\" height=\"" << (max_h + 1) * kCell
     << "\">\n";
  int x0 = kCell / 2;
  for (const auto& g : grids) {
    const auto [w, h] = extent(g);
    os << svg_cells(g, x0, kCell / 2 + (max_h - h) * kCell, h);
    x0 += std::max(w, 1) * kCell + kCell;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const Instance& instance, RenderFormat format) {
  std::vector<Grid> grids;
  if (const auto* p = std::get_if<FloorPlan>(&instance)) {
    grids.push_back(plan_grid(*p));
  } else if (const auto* cp = std::get_if<CompatibleFloorPlan>(&instance)) {
    grids.push_back(plan_grid(cp->left()));
    grids.push_back(plan_grid(cp->right()));
  } else if (const auto* h = std::get_if<HeightMap>(&instance)) {
    grids.push_back(height_grid(*h));
  } else if (const auto* d = std::get_if<YoungDiagram>(&instance)) {
    grids.push_back(diagram_grid(*d));
  } else {
    throw Error(ErrorCode::UnsupportedKind, "cannot render a " + kind_of(instance));
  }
  if (format == RenderFormat::Svg) return svg(grids);
  if (grids.size() == 1) return ascii(grids[0]);
  return "P:\n" + ascii(grids[0]) + "Q:\n" + ascii(grids[1]);
}

RenderFormat parse_render_format(const std::string& name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "svg") return RenderFormat::Svg;
  throw Error(ErrorCode::ParseError, "unknown format '" + name + "'");
}

}  // namespace gerst
