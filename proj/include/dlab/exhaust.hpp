#pragma once

#include "dlab/domain.hpp"
#include "dlab/grid.hpp"
#include "dlab/types.hpp"

namespace dlab {

/// Set of closed level-k mesh cells whose closure lies in the domain.
/// Cell (a,b) spans [origin + s*(a,b), origin + s*(a+1,b+1)], s = cell_size.
struct CellSet {
  int level = 0;
  double cell_size = 0;
  Vec2 origin;
  ArrayXXb included;  // (cells_x, cells_y)

  long count() const { return included.count(); }
  double area() const { return count() * cell_size * cell_size; }
  bool empty() const { return count() == 0; }
};

/// Cells of level k contained in the domain. A cell is included when sdf
/// < -delta at its four corners and center, with delta = 0 for convex
/// domains and delta = cell_size/2 otherwise. Every point of an included
/// cell is within sqrt(2)/4 * cell_size of a tested point, so the
/// 1-Lipschitz sdf stays negative on the whole closed cell; the margin
/// also makes the sets nested under k -> k+1 for the built-in domains.
CellSet build_cellset(const Domain& domain, int k);

/// Classification of the nodes of a fine grid against a coarser cell set.
/// free: all four incident fine cells lie inside the refined cell set
/// (never on the grid border, never adjacent to an exterior node).
/// clamped: sdf < 0 but not free. exterior: everything else.
struct NodeMask {
  int level = 0;  // exhaustion level k this mask represents
  ArrayXXb free;
  ArrayXXb clamped;
  ArrayXXb exterior;

  long free_count() const { return free.count(); }
};

/// Splits the nodes of `grid` for the admissible class of `cells`.
/// Requires cells.level <= grid.level and matching origins.
NodeMask node_masks(const CellSet& cells, const GridSpec& grid,
                    const Domain& domain);

}  // namespace dlab
