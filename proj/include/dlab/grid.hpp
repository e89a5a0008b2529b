#pragma once

#include "dlab/domain.hpp"
#include "dlab/types.hpp"

namespace dlab {

/// Uniform node grid over a bounding box. Spacing is dyadic,
/// h = scale * 2^-level with scale the longer box side, so nodes of level
/// k are a subset of nodes of any finer level.
struct GridSpec {
  Vec2 origin;
  double h = 0;
  int nx = 0;  // nodes along x
  int ny = 0;  // nodes along y
  int level = 0;

  double x(int i) const { return origin.x() + h * i; }
  double y(int j) const { return origin.y() + h * j; }
  Vec2 node(int i, int j) const { return {x(i), y(j)}; }

  bool operator==(const GridSpec&) const = default;
};

/// Grid of level `level` covering `bbox`. Requires level >= 0.
GridSpec make_grid(const Rect& bbox, int level);

/// Mask of nodes with sdf <= 0 (closure of the domain).
ArrayXXb inside_mask(const GridSpec& grid, const Domain& domain);

}  // namespace dlab
