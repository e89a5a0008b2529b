#include "dlab/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "dlab/grid.hpp"
#include "dlab/report.hpp"
#include "dlab/rng.hpp"

namespace dlab {

namespace {

ScalarField midpoint(const ScalarField& a, const ScalarField& b) {
  return {a.grid, 0.5 * (a.values + b.values)};
}

ScalarField half_difference(const ScalarField& a, const ScalarField& b) {
  return {a.grid, 0.5 * (a.values - b.values)};
}

std::pair<ScalarField, SolveReport> solve_labeled(const NodeMask& mask,
                                                  const ScalarField& phi,
                                                  const SolveOptions& opts,
                                                  const std::string& label) {
  try {
    return solve_dirichlet(mask, phi, opts);
  } catch (const SolveError& e) {
    throw SolveError(label + ": " + e.what(), e.iterations, e.residual);
  }
}

}  // namespace

EnergyLedger run_exhaustion_suite(const Domain& domain,
                                  const BoundaryData& data, int K, int k_min,
                                  int k_max, double tol) {
  if (K < 2) throw std::invalid_argument("K must be >= 2");
  if (k_min < 1 || k_max < k_min || k_max > K)
    throw std::invalid_argument("level range must satisfy 1 <= k_min <= k_max <= K");

  const GridSpec grid = make_grid(domain.bbox, K);
  const ArrayXXb inside = inside_mask(grid, domain);
  const ScalarField phi = sample_phi(data, grid, domain);
  SolveOptions opts;
  opts.tol = tol;

  EnergyLedger led;
  led.domain = domain.name;
  led.data = data.name;
  led.K = K;

  const NodeMask full_mask =
      node_masks(build_cellset(domain, K), grid, domain);
  auto [u_full, full_rep] = solve_labeled(
      full_mask, phi, opts, "full-domain solve (k=" + std::to_string(K) + ")");
  led.E_full = energy(u_full, inside);

  ScalarField prev = phi;
  bool warm = false;
  for (int k = k_min; k <= k_max; ++k) {
    const CellSet cells = build_cellset(domain, k);
    const NodeMask mask = node_masks(cells, grid, domain);
    LevelRecord rec;
    rec.k = k;
    rec.num_cells = cells.count();
    rec.area = cells.area();
    rec.num_free = mask.free_count();

    ScalarField u_k = phi;
    if (rec.num_free > 0) {
      SolveOptions lv = opts;
      if (warm) lv.warm_start = &prev;
      auto [u, rep] =
          solve_labeled(mask, phi, lv, "level k=" + std::to_string(k));
      u_k = u;
      rec.iterations = rep.iterations;
      rec.residual = rep.residual;
    }

    rec.E_k = energy(u_k, inside);
    rec.gap = rec.E_k - led.E_full;
    rec.midpoint_energy = energy(midpoint(u_full, u_k), inside);
    const double half_diff_energy = energy(half_difference(u_full, u_k), inside);
    rec.parallelogram_residual = std::abs(
        rec.midpoint_energy + half_diff_energy - 0.5 * (led.E_full + rec.E_k));
    const H1Distance h1 = h1_distance(u_k, u_full, inside);
    rec.grad_sq = h1.grad_sq;
    rec.l2_sq = h1.l2_sq;
    led.levels.push_back(rec);

    prev = u_k;
    warm = true;
  }

  led.E_ref = led.levels.front().E_k;
  const double slack = 10.0 * tol * led.E_ref;
  for (std::size_t i = 0; i < led.levels.size(); ++i) {
    const LevelRecord& r = led.levels[i];
    if (i + 1 < led.levels.size())
      led.worst_monotone =
          std::max(led.worst_monotone, led.levels[i + 1].E_k - r.E_k);
    led.worst_monotone = std::max(led.worst_monotone, led.E_full - r.E_k);
    led.worst_convexity =
        std::max(led.worst_convexity, led.E_full - r.midpoint_energy);
    const double denom = r.E_k + led.E_full;
    const double ratio = denom > 0
                             ? r.parallelogram_residual / denom
                             : (r.parallelogram_residual > 0 ? HUGE_VAL : 0.0);
    led.worst_parallelogram = std::max(led.worst_parallelogram, ratio);
    led.worst_galerkin =
        std::max(led.worst_galerkin, 0.25 * r.grad_sq - 0.5 * r.gap);
  }
  led.monotone = led.worst_monotone <= slack;
  led.convexity = led.worst_convexity <= slack;
  led.parallelogram = led.worst_parallelogram <= 1e-12;
  led.galerkin = led.worst_galerkin <= slack;
  return led;
}

double friedrichs_worst_ratio(const NodeMask& mask, const GridSpec& grid,
                              const Domain& domain, int n_fields,
                              std::uint64_t seed) {
  const ArrayXXb inside = inside_mask(grid, domain);
  std::vector<std::pair<int, int>> free_nodes;
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i)
      if (mask.free(i, j)) free_nodes.emplace_back(i, j);
  if (free_nodes.empty()) return 0.0;

  const double L = std::max(domain.bbox.width(), domain.bbox.height());
  ScalarField w{grid, ArrayXXd::Zero(grid.nx, grid.ny)};
  double worst = 0;
  for (int f = 0; f < n_fields; ++f) {
    SubStream rng(seed, static_cast<std::uint64_t>(f));
    double sum_sq = 0;
    for (const auto& [i, j] : free_nodes) {
      const double v = 2.0 * rng.next_double() - 1.0;
      w.values(i, j) = v;
      sum_sq += v * v;
    }
    const double den = L * L * energy(w, inside);
    if (den > 0)
      worst = std::max(worst, grid.h * grid.h * sum_sq / den);
  }
  return worst;
}

ComparisonReport compare_minimizer_vs_perron(const Domain& domain,
                                             const BoundaryData& data, int K,
                                             const std::vector<Vec2>& probes,
                                             const WosConfig& wos,
                                             double c_disc) {
  const GridSpec grid = make_grid(domain.bbox, K);
  const ScalarField phi = sample_phi(data, grid, domain);
  const NodeMask full = node_masks(build_cellset(domain, K), grid, domain);
  auto [u, rep] = solve_labeled(full, phi, {}, "full-domain solve");

  ComparisonReport out;
  out.domain = domain.name;
  out.data = data.name;
  out.h = grid.h;
  out.c_disc = c_disc;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    ProbeResult pr;
    pr.x = probes[i];
    if (domain.sdf(probes[i]) > -10.0 * grid.h) {
      pr.skipped = true;
      pr.note = "closer than 10h to the boundary";
      out.probes.push_back(pr);
      continue;
    }
    WosConfig c = wos;
    c.seed = wos.seed + i;  // matches wos_grid over the unskipped list
    const WosEstimate est = wos_estimate(domain, data.g, probes[i], c);
    pr.u = interpolate(u, probes[i]);
    pr.wos_mean = est.mean;
    pr.wos_std_err = est.std_err;
    pr.error = std::abs(pr.u - est.mean);
    pr.bound = 3.0 * est.std_err + c_disc * grid.h * grid.h;
    pr.pass = pr.error <= pr.bound;
    if (!pr.pass) out.all_pass = false;
    out.probes.push_back(pr);
  }
  return out;
}

std::vector<Vec2> sample_boundary(const Domain& domain, int level) {
  const GridSpec g = make_grid(domain.bbox, level);
  ArrayXXd s(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) s(i, j) = domain.sdf(g.node(i, j));

  auto bisect = [&](Vec2 a, Vec2 b, double sa) {
    // invariant: sign(sdf) differs between a and b
    for (int it = 0; it < 40; ++it) {
      const Vec2 m = 0.5 * (a + b);
      const double sm = domain.sdf(m);
      if ((sm < 0) == (sa < 0)) {
        a = m;
        sa = sm;
      } else {
        b = m;
      }
    }
    return 0.5 * (a + b);
  };

  std::vector<Vec2> pts;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (s(i, j) == 0.0) pts.push_back(g.node(i, j));
      if (i + 1 < g.nx && s(i, j) * s(i + 1, j) < 0)
        pts.push_back(bisect(g.node(i, j), g.node(i + 1, j), s(i, j)));
      if (j + 1 < g.ny && s(i, j) * s(i, j + 1) < 0)
        pts.push_back(bisect(g.node(i, j), g.node(i, j + 1), s(i, j)));
    }
  }
  return pts;
}

double boundary_oscillation(const Domain& domain,
                            const std::function<double(const Vec2&)>& g) {
  const std::vector<Vec2> pts = sample_boundary(domain);
  if (pts.empty()) throw std::runtime_error("no boundary points sampled");
  double lo = g(pts[0]), hi = lo;
  for (const Vec2& p : pts) {
    const double v = g(p);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

BoundaryTable boundary_convergence_suite(const Domain& domain,
                                         const BoundaryData& data, int K,
                                         const Vec2& xi) {
  const double diag = domain.bbox.diagonal();
  if (std::abs(domain.sdf(xi)) > 1e-9 * diag)
    throw std::invalid_argument("xi is not on the boundary");

  const double step = 1e-6 * diag;
  Vec2 grad((domain.sdf({xi.x() + step, xi.y()}) -
             domain.sdf({xi.x() - step, xi.y()})),
            (domain.sdf({xi.x(), xi.y() + step}) -
             domain.sdf({xi.x(), xi.y() - step})));
  grad /= 2.0 * step;
  const double gn = grad.norm();
  if (gn < 1e-6)
    throw std::invalid_argument("cannot determine a boundary direction at xi");

  BoundaryTable tab;
  tab.domain = domain.name;
  tab.data = data.name;
  tab.xi = xi;
  tab.used_bisector = gn < 0.999;  // kink: central difference averages faces

  Vec2 inward = -grad / gn;
  const double probe_step = 1e-3 * diag;
  if (domain.sdf(xi + probe_step * inward) >= 0) inward = -inward;
  if (domain.sdf(xi + probe_step * inward) >= 0)
    throw std::invalid_argument("no inward direction found at xi");

  const GridSpec grid = make_grid(domain.bbox, K);
  const ScalarField phi = sample_phi(data, grid, domain);
  const NodeMask full = node_masks(build_cellset(domain, K), grid, domain);
  auto [u, rep] = solve_labeled(full, phi, {}, "full-domain solve");

  tab.g_xi = data.g(xi);
  tab.osc = boundary_oscillation(domain, data.g);
  for (int m = 2; m <= 6; ++m) {
    const double d = std::ldexp(diag, -m);
    const Vec2 x = xi + d * inward;
    if (!(domain.sdf(x) < 0)) continue;
    BoundaryRow row;
    row.d = d;
    row.u = interpolate(u, x);
    row.deviation = std::abs(row.u - tab.g_xi);
    tab.rows.push_back(row);
  }
  if (tab.rows.size() < 2)
    throw std::invalid_argument("fewer than two ray probes fall inside");

  for (std::size_t i = 0; i + 1 < tab.rows.size(); ++i)
    if (!(tab.rows[i + 1].deviation < tab.rows[i].deviation))
      tab.decreasing = false;
  tab.final_ok = tab.rows.back().deviation <= 0.05 * tab.osc;
  return tab;
}

std::vector<HadamardRow> hadamard_energy_growth(int M_lo, int M_hi, int K) {
  if (M_lo < 1 || M_hi > 4 || M_lo > M_hi)
    throw std::invalid_argument("partial sum range must satisfy 1 <= M_lo <= M_hi <= 4");
  const Domain disc = builtin_domain("disc(1)");
  const GridSpec grid = make_grid(disc.bbox, K);
  double top_mode = 1;
  for (int n = 2; n <= M_hi; ++n) top_mode *= n;
  if (top_mode * grid.h > 0.1)
    throw std::invalid_argument(
        "grid too coarse for the top mode: need factorial(M_hi) * h <= 0.1");

  const ArrayXXb inside = inside_mask(grid, disc);
  const NodeMask full = node_masks(build_cellset(disc, K), grid, disc);
  std::vector<HadamardRow> rows;
  for (int M = M_lo; M <= M_hi; ++M) {
    const BoundaryData data =
        builtin_data("hadamard_partial(" + std::to_string(M) + ")", disc);
    const ScalarField phi = sample_phi(data, grid, disc);
    auto [u, rep] =
        solve_labeled(full, phi, {}, "partial sum M=" + std::to_string(M));
    HadamardRow row;
    row.M = M;
    row.discrete_energy = energy(u, inside);
    row.exact_energy = hadamard_exact_energy(M);
    row.rel_error =
        std::abs(row.discrete_energy - row.exact_energy) / row.exact_energy;
    row.ratio_to_prev =
        rows.empty() ? 1.0 : row.discrete_energy / rows.back().discrete_energy;
    row.ratio_to_first =
        rows.empty() ? 1.0 : row.discrete_energy / rows.front().discrete_energy;
    row.iterations = rep.iterations;
    rows.push_back(row);
  }
  return rows;
}

std::vector<AnnulusRow> annulus_measure_law(const std::vector<double>& rhos,
                                            double r_probe, int K,
                                            const WosConfig& wos) {
  std::vector<AnnulusRow> rows;
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    const double rho = rhos[i];
    if (!(rho > 0 && rho < r_probe && r_probe < 1))
      throw std::invalid_argument(
          "need 0 < rho < r_probe < 1 for the radial law");
    const Domain ann =
        builtin_domain("annulus(" + format_shortest(rho) + ",1)");
    const BoundaryData data = builtin_data("annulus_indicator", ann);
    const GridSpec grid = make_grid(ann.bbox, K);
    const ScalarField phi = sample_phi(data, grid, ann);
    const NodeMask full = node_masks(build_cellset(ann, K), grid, ann);
    auto [u, rep] = solve_labeled(full, phi, {}, "annulus rho=" +
                                                     std::to_string(rho));
    AnnulusRow row;
    row.rho = rho;
    row.exact = std::log(r_probe) / std::log(rho);
    const Vec2 probe(r_probe, 0.0);
    row.u = interpolate(u, probe);
    row.solver_rel_err = std::abs(row.u - row.exact) / row.exact;
    WosConfig c = wos;
    c.seed = wos.seed + i;
    const WosEstimate est = wos_estimate(ann, data.g, probe, c);
    row.wos_mean = est.mean;
    row.wos_std_err = est.std_err;
    row.wos_err = std::abs(est.mean - row.exact);
    row.solver_ok = row.solver_rel_err <= 0.02;
    row.wos_ok = row.wos_err <= 3.0 * est.std_err + 0.02 * row.exact;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dlab
