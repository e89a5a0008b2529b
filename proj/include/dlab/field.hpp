#pragma once

#include "dlab/boundary_data.hpp"
#include "dlab/domain.hpp"
#include "dlab/grid.hpp"
#include "dlab/types.hpp"

namespace dlab {

/// Nodal values on a grid, values(i,j) at node (x(i), y(j)).
struct ScalarField {
  GridSpec grid;
  ArrayXXd values;
};

/// Samples phi at nodes with sdf <= 0; other nodes are set to zero.
ScalarField sample_phi(const BoundaryData& data, const GridSpec& grid,
                       const Domain& domain);

/// Discrete Dirichlet energy: sum of squared differences over grid edges
/// whose two endpoints both have inside(i,j) true. In two dimensions the
/// mesh factors cancel, so no h appears. Always >= 0; the edge set depends
/// only on `inside`, never on an exhaustion level, so energies of fields
/// from different levels are directly comparable.
double energy(const ScalarField& v, const ArrayXXb& inside);

/// Seminorm/norm parts of the discrete H1 distance between two fields on
/// the same grid: grad_sq is the edge energy of the difference, l2_sq is
/// h^2 * sum over inside nodes of the squared difference.
struct H1Distance {
  double grad_sq = 0;
  double l2_sq = 0;
};

H1Distance h1_distance(const ScalarField& a, const ScalarField& b,
                       const ArrayXXb& inside);

/// Bilinear interpolation at p; p is clamped to the grid box.
double interpolate(const ScalarField& v, const Vec2& p);

}  // namespace dlab
