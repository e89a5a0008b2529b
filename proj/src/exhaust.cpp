#include "dlab/exhaust.hpp"

#include <cmath>
#include <stdexcept>

namespace dlab {

CellSet build_cellset(const Domain& domain, int k) {
  if (k < 1) throw std::invalid_argument("cell level must be >= 1");
  const GridSpec g = make_grid(domain.bbox, k);
  CellSet cs;
  cs.level = k;
  cs.cell_size = g.h;
  cs.origin = g.origin;
  cs.included = ArrayXXb::Constant(g.nx - 1, g.ny - 1, false);
  const double delta = domain.convex ? 0.0 : 0.5 * g.h;
  for (int b = 0; b < g.ny - 1; ++b) {
    for (int a = 0; a < g.nx - 1; ++a) {
      const Vec2 c00 = g.node(a, b);
      const Vec2 c11 = g.node(a + 1, b + 1);
      const Vec2 mid = 0.5 * (c00 + c11);
      const bool in = domain.sdf(c00) < -delta &&
                      domain.sdf(g.node(a + 1, b)) < -delta &&
                      domain.sdf(g.node(a, b + 1)) < -delta &&
                      domain.sdf(c11) < -delta && domain.sdf(mid) < -delta;
      cs.included(a, b) = in;
    }
  }
  return cs;
}

NodeMask node_masks(const CellSet& cells, const GridSpec& grid,
                    const Domain& domain) {
  if (cells.level > grid.level)
    throw std::invalid_argument("cell set is finer than the node grid");
  if ((cells.origin - grid.origin).norm() != 0.0)
    throw std::invalid_argument("cell set and grid have different origins");

  const int factor = 1 << (grid.level - cells.level);
  const int fcx = grid.nx - 1;  // fine cells along x
  const int fcy = grid.ny - 1;

  // Fine cell (a,b) is inside iff its coarse parent is included.
  auto fine_inside = [&](int a, int b) {
    if (a < 0 || b < 0 || a >= fcx || b >= fcy) return false;
    const int ca = a / factor;
    const int cb = b / factor;
    if (ca >= cells.included.rows() || cb >= cells.included.cols())
      return false;
    return cells.included(ca, cb);
  };

  NodeMask nm;
  nm.level = cells.level;
  nm.free = ArrayXXb::Constant(grid.nx, grid.ny, false);
  nm.clamped = ArrayXXb::Constant(grid.nx, grid.ny, false);
  nm.exterior = ArrayXXb::Constant(grid.nx, grid.ny, false);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const bool free = fine_inside(i - 1, j - 1) && fine_inside(i, j - 1) &&
                        fine_inside(i - 1, j) && fine_inside(i, j);
      if (free) {
        nm.free(i, j) = true;
      } else if (domain.sdf(grid.node(i, j)) < 0.0) {
        nm.clamped(i, j) = true;
      } else {
        nm.exterior(i, j) = true;
      }
    }
  }
  return nm;
}

}  // namespace dlab
