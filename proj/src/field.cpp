#include "dlab/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlab {

ScalarField sample_phi(const BoundaryData& data, const GridSpec& grid,
                       const Domain& domain) {
  ScalarField f;
  f.grid = grid;
  f.values = ArrayXXd::Zero(grid.nx, grid.ny);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const Vec2 p = grid.node(i, j);
      if (domain.sdf(p) <= 0.0) f.values(i, j) = data.phi(p);
    }
  }
  return f;
}

namespace {

void check_shape(const ScalarField& v, const ArrayXXb& inside) {
  if (v.values.rows() != inside.rows() || v.values.cols() != inside.cols())
    throw std::invalid_argument("field and mask shapes differ");
}

}  // namespace

double energy(const ScalarField& v, const ArrayXXb& inside) {
  check_shape(v, inside);
  const int nx = v.grid.nx, ny = v.grid.ny;
  double e = 0;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      if (!inside(i, j)) continue;
      if (i + 1 < nx && inside(i + 1, j)) {
        const double d = v.values(i + 1, j) - v.values(i, j);
        e += d * d;
      }
      if (j + 1 < ny && inside(i, j + 1)) {
        const double d = v.values(i, j + 1) - v.values(i, j);
        e += d * d;
      }
    }
  }
  return e;
}

H1Distance h1_distance(const ScalarField& a, const ScalarField& b,
                       const ArrayXXb& inside) {
  if (!(a.grid == b.grid))
    throw std::invalid_argument("fields live on different grids");
  check_shape(a, inside);
  ScalarField diff{a.grid, a.values - b.values};
  H1Distance d;
  d.grad_sq = energy(diff, inside);
  double s = 0;
  for (int j = 0; j < a.grid.ny; ++j)
    for (int i = 0; i < a.grid.nx; ++i)
      if (inside(i, j)) s += diff.values(i, j) * diff.values(i, j);
  d.l2_sq = a.grid.h * a.grid.h * s;
  return d;
}

double interpolate(const ScalarField& v, const Vec2& p) {
  const GridSpec& g = v.grid;
  double fx = (p.x() - g.origin.x()) / g.h;
  double fy = (p.y() - g.origin.y()) / g.h;
  int i = static_cast<int>(fx);
  int j = static_cast<int>(fy);
  i = std::clamp(i, 0, g.nx - 2);
  j = std::clamp(j, 0, g.ny - 2);
  const double tx = std::clamp(fx - i, 0.0, 1.0);
  const double ty = std::clamp(fy - j, 0.0, 1.0);
  const double v00 = v.values(i, j), v10 = v.values(i + 1, j);
  const double v01 = v.values(i, j + 1), v11 = v.values(i + 1, j + 1);
  return (1 - tx) * ((1 - ty) * v00 + ty * v01) +
         tx * ((1 - ty) * v10 + ty * v11);
}

}  // namespace dlab
