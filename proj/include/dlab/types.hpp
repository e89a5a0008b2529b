#pragma once

#include <Eigen/Dense>

namespace dlab {

using Vec2 = Eigen::Vector2d;
using ArrayXXd = Eigen::ArrayXXd;
using ArrayXXb = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXd = Eigen::VectorXd;

/// Closed axis-aligned rectangle, lo <= hi componentwise.
struct Rect {
  Vec2 lo;
  Vec2 hi;

  double width() const { return hi.x() - lo.x(); }
  double height() const { return hi.y() - lo.y(); }
  double diagonal() const { return (hi - lo).norm(); }

  bool contains(const Vec2& p) const {
    return p.x() >= lo.x() && p.x() <= hi.x() && p.y() >= lo.y() &&
           p.y() <= hi.y();
  }
};

}  // namespace dlab
