#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dlab/grid.hpp"
#include "dlab/report.hpp"
#include "dlab/verify.hpp"

namespace dlab {

const std::vector<std::string>& exhaustion_domains() {
  static const std::vector<std::string> v{"unit_square", "disc(1)",
                                          "annulus(0.2,1)", "l_shape"};
  return v;
}

const std::vector<std::string>& exhaustion_data() {
  static const std::vector<std::string> v{"affine(1,-0.5,0.25)", "saddle",
                                          "fourier_mode(1)", "fourier_mode(2)",
                                          "fourier_mode(3)"};
  return v;
}

const std::vector<CompareCase>& compare_corpus() {
  static const std::vector<CompareCase> v{
      {"disc(1)",
       "fourier_mode(1)",
       {Vec2(0.5, 0), Vec2(0, 0.3), Vec2(-0.2, -0.2)}},
      {"unit_square",
       "saddle",
       {Vec2(0.25, 0.25), Vec2(0.75, 0.25), Vec2(0.5, 0.5), Vec2(0.25, 0.75),
        Vec2(0.6, 0.4)}},
      {"l_shape",
       "fourier_mode(2)",
       {Vec2(0.25, 0.25), Vec2(0.7, 0.25), Vec2(0.25, 0.7), Vec2(0.4, 0.4),
        Vec2(0.15, 0.6)}},
  };
  return v;
}

const std::vector<BoundaryCase>& boundary_corpus() {
  static const std::vector<BoundaryCase> v{
      {"disc(1)", "fourier_mode(1)", Vec2(1, 0)},
      {"unit_square", "saddle", Vec2(1, 0.5)},
  };
  return v;
}

namespace {

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '(' || c == ',') out += '_';
    else if (c == ')' || c == ' ') continue;
    else out += c;
  }
  return out;
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string s;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) s += ',';
    s += c;
    first = false;
  }
  s += '\n';
  return s;
}

std::string f(double v) { return format_g17(v); }

/// Doubled worst probe-wise |u_h - exact| / h^2 over the analytic
/// comparison cases; scales the discretization term of the wos band.
double calibrate_c_disc(int K) {
  double worst = 0;
  for (const CompareCase& cc : compare_corpus()) {
    const Domain dom = builtin_domain(cc.domain);
    const BoundaryData data = builtin_data(cc.data, dom);
    if (!data.has_analytic()) continue;
    const GridSpec grid = make_grid(dom.bbox, K);
    const ScalarField phi = sample_phi(data, grid, dom);
    const NodeMask full = node_masks(build_cellset(dom, K), grid, dom);
    auto [u, rep] = solve_dirichlet(full, phi, {});
    for (const Vec2& x : cc.probes) {
      if (dom.sdf(x) > -10.0 * grid.h) continue;
      const double err = std::abs(interpolate(u, x) - data.analytic(x));
      worst = std::max(worst, err / (grid.h * grid.h));
    }
  }
  return 2.0 * worst;
}

void write_exhaustion_csv(const std::string& dir, const EnergyLedger& led) {
  std::string s = "k,num_cells,area,num_free_nodes,E_k,gap,"
                  "parallelogram_residual,grad_sq,l2_sq,iterations,residual\n";
  for (const LevelRecord& r : led.levels)
    s += csv_row({std::to_string(r.k), std::to_string(r.num_cells), f(r.area),
                  std::to_string(r.num_free), f(r.E_k), f(r.gap),
                  f(r.parallelogram_residual), f(r.grad_sq), f(r.l2_sq),
                  std::to_string(r.iterations), f(r.residual)});
  write_text_file(dir + "/exhaustion_" + sanitize(led.domain) + "_" +
                      sanitize(led.data) + ".csv",
                  s);
}

void write_compare_csv(const std::string& dir, const ComparisonReport& rep) {
  std::string s = "x,y,u,wos_mean,wos_stderr,error,bound,pass,skipped\n";
  for (const ProbeResult& p : rep.probes)
    s += csv_row({f(p.x.x()), f(p.x.y()), f(p.u), f(p.wos_mean),
                  f(p.wos_std_err), f(p.error), f(p.bound),
                  p.pass ? "1" : "0", p.skipped ? "1" : "0"});
  write_text_file(dir + "/compare_" + sanitize(rep.domain) + "_" +
                      sanitize(rep.data) + ".csv",
                  s);
}

void write_boundary_csv(const std::string& dir, const BoundaryTable& tab) {
  std::string s = "d,u,deviation,g_xi,osc\n";
  for (const BoundaryRow& r : tab.rows)
    s += csv_row({f(r.d), f(r.u), f(r.deviation), f(tab.g_xi), f(tab.osc)});
  write_text_file(dir + "/boundary_" + sanitize(tab.domain) + "_" +
                      sanitize(tab.data) + ".csv",
                  s);
}

}  // namespace

VerifyRun run_suites(const std::set<std::string>& which,
                     const SuiteOptions& opt) {
  static const std::set<std::string> known{
      "all",     "exhaustion", "friedrichs",
      "compare", "boundary",   "hadamard",
      "annulus"};
  for (const std::string& s : which)
    if (!known.count(s))
      throw std::invalid_argument(
          "unknown suite '" + s +
          "'; valid: all, exhaustion, friedrichs, compare, boundary, "
          "hadamard, annulus");
  const bool all = which.count("all") > 0;
  auto want = [&](const char* name) { return all || which.count(name) > 0; };

  VerifyRun run;
  const int k_max = opt.k_max < 0 ? opt.K : opt.k_max;
  const bool emit = !opt.out_dir.empty();
  // These two suites chase continuum values and need a finer grid than the
  // exhaustion default; they run at level >= 9 regardless of opt.K.
  const int K_fine = std::max(opt.K, 9);

  if (want("exhaustion")) {
    for (const std::string& ds : exhaustion_domains()) {
      const Domain dom = builtin_domain(ds);
      for (const std::string& bs : exhaustion_data()) {
        const BoundaryData data = builtin_data(bs, dom);
        EnergyLedger led =
            run_exhaustion_suite(dom, data, opt.K, opt.k_min, k_max, opt.tol);
        if (emit) write_exhaustion_csv(opt.out_dir, led);
        run.outcomes.push_back({"exhaustion", ds + "/" + bs, led.pass(),
                                led.worst_parallelogram});
        run.exhaustion.push_back(std::move(led));
      }
      if (emit && opt.emit_svg) {
        const GridSpec grid = make_grid(dom.bbox, opt.K);
        for (int k = opt.k_min; k <= k_max; ++k) {
          const NodeMask mask =
              node_masks(build_cellset(dom, k), grid, dom);
          write_text_file(opt.out_dir + "/mask_" + sanitize(ds) + "_k" +
                              std::to_string(k) + ".svg",
                          render_svg_mask(mask, grid));
        }
      }
    }
  }

  if (want("friedrichs")) {
    for (const std::string& ds : exhaustion_domains()) {
      const Domain dom = builtin_domain(ds);
      const GridSpec grid = make_grid(dom.bbox, opt.K);
      FriedrichsCase fc;
      fc.domain = ds;
      for (int k = opt.k_min; k <= k_max; ++k) {
        const NodeMask mask = node_masks(build_cellset(dom, k), grid, dom);
        const double r = friedrichs_worst_ratio(mask, grid, dom, 100, opt.seed);
        fc.worst_ratio = std::max(fc.worst_ratio, r);
        if (r > 1.0) ++fc.violations;
      }
      run.outcomes.push_back(
          {"friedrichs", ds, fc.pass(), fc.worst_ratio});
      run.friedrichs.push_back(fc);
    }
    if (emit) {
      std::string s = "domain,worst_ratio,violations\n";
      for (const FriedrichsCase& fc : run.friedrichs)
        s += csv_row({fc.domain, f(fc.worst_ratio),
                      std::to_string(fc.violations)});
      write_text_file(opt.out_dir + "/friedrichs.csv", s);
    }
  }

  if (want("compare")) {
    const double c_disc = calibrate_c_disc(opt.K);
    for (const CompareCase& cc : compare_corpus()) {
      const Domain dom = builtin_domain(cc.domain);
      const BoundaryData data = builtin_data(cc.data, dom);
      WosConfig w;
      w.epsilon = opt.epsilon;
      w.n_walks = opt.n_walks;
      w.seed = opt.seed;
      ComparisonReport rep = compare_minimizer_vs_perron(
          dom, data, opt.K, cc.probes, w, c_disc);
      if (emit) write_compare_csv(opt.out_dir, rep);
      double worst = 0;
      for (const ProbeResult& p : rep.probes)
        if (!p.skipped && p.bound > 0)
          worst = std::max(worst, p.error / p.bound);
      run.outcomes.push_back(
          {"compare", cc.domain + "/" + cc.data, rep.all_pass, worst});
      if (emit && opt.emit_svg) {
        const GridSpec grid = make_grid(dom.bbox, opt.K);
        const ScalarField phi = sample_phi(data, grid, dom);
        const NodeMask full = node_masks(build_cellset(dom, opt.K), grid, dom);
        auto [u, srep] = solve_dirichlet(full, phi, {});
        write_text_file(opt.out_dir + "/solution_" + sanitize(cc.domain) +
                            "_" + sanitize(cc.data) + ".svg",
                        render_svg_heatmap(u, inside_mask(grid, dom)));
      }
      run.compare.push_back(std::move(rep));
    }
  }

  if (want("boundary")) {
    for (const BoundaryCase& bc : boundary_corpus()) {
      const Domain dom = builtin_domain(bc.domain);
      const BoundaryData data = builtin_data(bc.data, dom);
      BoundaryTable tab = boundary_convergence_suite(dom, data, opt.K, bc.xi);
      if (emit) write_boundary_csv(opt.out_dir, tab);
      const double denom = 0.05 * tab.osc;
      run.outcomes.push_back({"boundary", bc.domain + "/" + bc.data,
                              tab.pass(),
                              denom > 0 ? tab.rows.back().deviation / denom
                                        : 0.0});
      run.boundary.push_back(std::move(tab));
    }
  }

  if (want("hadamard")) {
    run.hadamard = hadamard_energy_growth(1, 4, K_fine);
    double worst = 0;
    bool pass = true;
    for (const HadamardRow& r : run.hadamard) {
      worst = std::max(worst, r.rel_error);
      if (r.rel_error > 0.1) pass = false;
    }
    if (run.hadamard.back().ratio_to_first < 1.25) pass = false;
    run.outcomes.push_back(
        {"hadamard", "disc(1)/hadamard_partial(1..4)", pass, worst});
    if (emit) {
      std::string s =
          "M,discrete_energy,exact_energy,rel_error,ratio_to_prev,"
          "ratio_to_first,iterations\n";
      for (const HadamardRow& r : run.hadamard)
        s += csv_row({std::to_string(r.M), f(r.discrete_energy),
                      f(r.exact_energy), f(r.rel_error), f(r.ratio_to_prev),
                      f(r.ratio_to_first), std::to_string(r.iterations)});
      write_text_file(opt.out_dir + "/hadamard.csv", s);
    }
  }

  if (want("annulus")) {
    WosConfig w;
    w.epsilon = opt.epsilon;
    w.n_walks = opt.n_walks;
    w.seed = opt.seed;
    run.annulus = annulus_measure_law({0.05, 0.1, 0.2}, 0.3, K_fine, w);
    for (const AnnulusRow& r : run.annulus) {
      const double wos_band = 3.0 * r.wos_std_err + 0.02 * r.exact;
      const double worst = std::max(
          r.solver_rel_err / 0.02, wos_band > 0 ? r.wos_err / wos_band : 0.0);
      run.outcomes.push_back({"annulus",
                              "annulus(" + format_shortest(r.rho) + ",1)",
                              r.solver_ok && r.wos_ok, worst});
    }
    if (emit) {
      std::string s =
          "rho,exact,u,solver_rel_err,wos_mean,wos_stderr,wos_err\n";
      for (const AnnulusRow& r : run.annulus)
        s += csv_row({f(r.rho), f(r.exact), f(r.u), f(r.solver_rel_err),
                      f(r.wos_mean), f(r.wos_std_err), f(r.wos_err)});
      write_text_file(opt.out_dir + "/annulus.csv", s);
    }
  }

  for (const SuiteOutcome& o : run.outcomes)
    if (!o.pass) run.all_pass = false;

  if (emit) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SuiteOutcome& o : run.outcomes)
      rows.push_back({{"suite", o.suite},
                      {"case", o.case_name},
                      {"pass", o.pass},
                      {"worst_metric", o.worst_metric}});
    write_text_file(opt.out_dir + "/summary.json", rows.dump(2) + "\n");
  }
  return run;
}

}  // namespace dlab
