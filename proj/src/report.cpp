#include "dlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace dlab {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_shortest(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string render_field_dump(const ScalarField& f) {
  const GridSpec& g = f.grid;
  std::string s;
  s += std::to_string(g.nx) + " " + std::to_string(g.ny) + " " +
       format_g17(g.h) + " " + format_g17(g.origin.x()) + " " +
       format_g17(g.origin.y()) + "\n";
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (i) s += ' ';
      s += format_g17(f.values(i, j));
    }
    s += '\n';
  }
  return s;
}

namespace {

void ramp_color(double t, int& r, int& g, int& b) {
  // 256-step blue-white-red diverging ramp.
  t = std::clamp(t, 0.0, 1.0);
  const int step = std::min(255, static_cast<int>(t * 256.0));
  const double u = step / 255.0;
  if (u < 0.5) {
    const double w = u / 0.5;
    r = static_cast<int>(59 + w * (255 - 59));
    g = static_cast<int>(76 + w * (255 - 76));
    b = static_cast<int>(192 + w * (255 - 192));
  } else {
    const double w = (u - 0.5) / 0.5;
    r = static_cast<int>(255 - w * (255 - 180));
    g = static_cast<int>(255 - w * (255 - 4));
    b = static_cast<int>(255 - w * (255 - 38));
  }
}

std::string svg_open(int nx, int ny) {
  return "<svg xmlns='http://www.w3.org/2000/svg' width='" +
         std::to_string(2 * (nx - 1)) + "' height='" +
         std::to_string(2 * (ny - 1)) + "' viewBox='0 0 " +
         std::to_string(nx - 1) + " " + std::to_string(ny - 1) + "'>\n";
}

std::string rect(int i, int j, int ny_cells, const std::string& fill) {
  // SVG y axis points down; flip so the grid's y grows upward.
  return "<rect x='" + std::to_string(i) + "' y='" +
         std::to_string(ny_cells - 1 - j) +
         "' width='1' height='1' fill='" + fill + "'/>\n";
}

}  // namespace

std::string render_svg_heatmap(const ScalarField& f, const ArrayXXb& inside) {
  const int nx = f.grid.nx, ny = f.grid.ny;
  double lo = 0, hi = 0;
  bool first = true;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (inside(i, j)) {
        const double v = f.values(i, j);
        lo = first ? v : std::min(lo, v);
        hi = first ? v : std::max(hi, v);
        first = false;
      }
  const double span = hi > lo ? hi - lo : 1.0;

  std::string s = svg_open(nx, ny);
  s += "<rect width='100%' height='100%' fill='#222'/>\n";
  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      if (!(inside(i, j) && inside(i + 1, j) && inside(i, j + 1) &&
            inside(i + 1, j + 1)))
        continue;
      const double v = 0.25 * (f.values(i, j) + f.values(i + 1, j) +
                               f.values(i, j + 1) + f.values(i + 1, j + 1));
      int r, g, b;
      ramp_color((v - lo) / span, r, g, b);
      char fill[8];
      std::snprintf(fill, sizeof fill, "#%02x%02x%02x", r, g, b);
      s += rect(i, j, ny - 1, fill);
    }
  }
  s += "</svg>\n";
  return s;
}

std::string render_svg_mask(const NodeMask& mask, const GridSpec& grid) {
  const int nx = grid.nx, ny = grid.ny;
  std::string s = svg_open(nx + 1, ny + 1);
  s += "<rect width='100%' height='100%' fill='#e8e8e8'/>\n";
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const char* fill = mask.free(i, j)      ? "#2a9d2a"
                         : mask.clamped(i, j) ? "#e0851f"
                                              : nullptr;
      if (fill) s += rect(i, j, ny, fill);
    }
  }
  s += "</svg>\n";
  return s;
}

}  // namespace dlab
