#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dlab/types.hpp"

namespace dlab {

/// Parsed "name" or "name(arg1,arg2,...)" form used by domain and data
/// constructors and by the config layer.
struct NameSpec {
  std::string name;
  std::vector<double> args;
};

/// Parses "ident" or "ident(num,...)". Throws std::invalid_argument on
/// malformed input.
NameSpec parse_name_spec(const std::string& text);

/// A bounded open set given through a signed distance function.
///
/// sdf is negative inside, zero on the boundary, positive outside, and
/// 1-Lipschitz. For the convex built-ins it is the exact distance; for
/// l_shape it is exact inside and a sign-correct lower bound on the
/// distance outside, which is all the grid machinery relies on.
struct Domain {
  std::string name;            // canonical spec, e.g. "annulus(0.2,1)"
  std::vector<double> params;  // parsed arguments, possibly empty
  Rect bbox;                   // tight axis-aligned bounding box
  bool convex = false;
  std::function<double(const Vec2&)> sdf;

  bool inside(const Vec2& p) const { return sdf(p) < 0.0; }
};

/// Builds one of the built-in domains:
///   unit_square          (0,1)^2
///   disc(r)              open disc of radius r > 0 about the origin
///   annulus(rho,1)       rho < |p| < 1, 0 < rho < 1 (outer radius fixed)
///   l_shape              (0,1)^2 minus the closed upper-right quadrant
///
/// Throws std::invalid_argument for unknown names or bad parameters; the
/// unknown-name message lists the valid constructors.
Domain builtin_domain(const std::string& spec);

}  // namespace dlab
