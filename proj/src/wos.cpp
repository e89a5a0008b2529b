#include "dlab/wos.hpp"

#include <cmath>
#include <stdexcept>

#include "dlab/rng.hpp"

namespace dlab {

Vec2 project_to_boundary(const Domain& domain, const Vec2& p) {
  const double step = 1e-6 * domain.bbox.diagonal();
  const double s = domain.sdf(p);
  Vec2 grad(
      (domain.sdf({p.x() + step, p.y()}) - domain.sdf({p.x() - step, p.y()})),
      (domain.sdf({p.x(), p.y() + step}) - domain.sdf({p.x(), p.y() - step})));
  grad /= 2.0 * step;
  const double gn = grad.norm();
  if (gn < 1e-12) return p;  // flat spot; sdf is already ~0 here
  return p - (s / gn) * (grad / gn);
}

WosEstimate wos_estimate(const Domain& domain,
                         const std::function<double(const Vec2&)>& g,
                         const Vec2& x, const WosConfig& cfg) {
  if (!(domain.sdf(x) < 0))
    throw std::invalid_argument("walk start point is not inside the domain");
  if (cfg.n_walks < 1) throw std::invalid_argument("n_walks must be >= 1");
  const double eps =
      cfg.epsilon > 0 ? cfg.epsilon : 1e-4 * domain.bbox.diagonal();

  WosEstimate est;
  est.n_walks = cfg.n_walks;
  double sum = 0, sum_sq = 0;
  long total_steps = 0;
  for (long w = 0; w < cfg.n_walks; ++w) {
    SubStream rng(cfg.seed, static_cast<std::uint64_t>(w));
    Vec2 p = x;
    int steps = 0;
    double dist = -domain.sdf(p);
    while (dist > eps && steps < cfg.max_steps) {
      const double angle = 2.0 * M_PI * rng.next_double();
      p += dist * Vec2(std::cos(angle), std::sin(angle));
      ++steps;
      dist = -domain.sdf(p);
    }
    if (dist > eps) ++est.truncated_walks;
    const double score = g(project_to_boundary(domain, p));
    sum += score;
    sum_sq += score * score;
    total_steps += steps;
  }

  const double n = static_cast<double>(cfg.n_walks);
  est.mean = sum / n;
  est.mean_steps = total_steps / n;
  if (cfg.n_walks > 1) {
    const double var = (sum_sq - n * est.mean * est.mean) / (n - 1);
    est.std_err = std::sqrt(std::max(var, 0.0) / n);
  }
  est.truncation_warning = est.truncated_walks * 100 > cfg.n_walks;
  return est;
}

std::vector<WosEstimate> wos_grid(const Domain& domain,
                                  const std::function<double(const Vec2&)>& g,
                                  const std::vector<Vec2>& points,
                                  const WosConfig& cfg) {
  std::vector<WosEstimate> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    WosConfig c = cfg;
    c.seed = cfg.seed + i;
    out.push_back(wos_estimate(domain, g, points[i], c));
  }
  return out;
}

}  // namespace dlab
