#include "dlab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace dlab {

GridSpec make_grid(const Rect& bbox, int level) {
  if (level < 1) throw std::invalid_argument("grid level must be >= 1");
  const double scale = std::max(bbox.width(), bbox.height());
  GridSpec g;
  g.level = level;
  g.h = std::ldexp(scale, -level);
  g.origin = bbox.lo;
  g.nx = static_cast<int>(std::llround(bbox.width() / g.h)) + 1;
  g.ny = static_cast<int>(std::llround(bbox.height() / g.h)) + 1;
  return g;
}

ArrayXXb inside_mask(const GridSpec& grid, const Domain& domain) {
  ArrayXXb m(grid.nx, grid.ny);
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i)
      m(i, j) = domain.sdf(grid.node(i, j)) <= 0.0;
  return m;
}

}  // namespace dlab
