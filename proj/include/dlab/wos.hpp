#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dlab/domain.hpp"
#include "dlab/types.hpp"

namespace dlab {

struct WosConfig {
  double epsilon = -1;    // boundary shell half-width; < 0 means
                          // 1e-4 * bbox diagonal of the domain
  int max_steps = 10000;  // per-walk cap; capped walks score at the
                          // nearest boundary point and are counted
  long n_walks = 100000;
  std::uint64_t seed = 42;
};

struct WosEstimate {
  double mean = 0;
  double std_err = 0;  // sample standard deviation / sqrt(n_walks)
  long n_walks = 0;
  double mean_steps = 0;
  long truncated_walks = 0;
  bool truncation_warning = false;  // truncated_walks > 1% of n_walks
};

/// Nearest boundary point of p, found by stepping |sdf| along the central
/// difference gradient of the sdf (one projection step; the sdf built-ins
/// are exact distances near their boundaries).
Vec2 project_to_boundary(const Domain& domain, const Vec2& p);

/// Walk-on-spheres estimate of the harmonic measure average of g at x:
/// each walk jumps uniformly on the sphere of radius |sdf| until it enters
/// the epsilon shell, then scores g at the projected boundary point. Walk
/// w draws from a substream addressed by (seed, w), so the estimate is
/// deterministic for a fixed seed. Requires x strictly inside.
WosEstimate wos_estimate(const Domain& domain,
                         const std::function<double(const Vec2&)>& g,
                         const Vec2& x, const WosConfig& cfg);

/// Independent estimates at several points; point i uses seed cfg.seed + i,
/// so a one-point list reproduces wos_estimate and results do not depend
/// on the order of the points.
std::vector<WosEstimate> wos_grid(const Domain& domain,
                                  const std::function<double(const Vec2&)>& g,
                                  const std::vector<Vec2>& points,
                                  const WosConfig& cfg);

}  // namespace dlab
