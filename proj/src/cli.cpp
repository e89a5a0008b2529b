#include "dlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "dlab/config.hpp"
#include "dlab/grid.hpp"
#include "dlab/report.hpp"
#include "dlab/solver.hpp"
#include "dlab/verify.hpp"
#include "dlab/wos.hpp"

namespace dlab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string f(double v) { return format_g17(v); }

RunConfig load_config_or_throw(const std::string& path) {
  if (path == "default") return RunConfig{};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const ConfigParse parsed = parse_config(ss.str());
  if (!parsed.ok()) {
    std::string msg;
    for (const ConfigError& e : parsed.errors) {
      msg += path + ":";
      if (e.line > 0) msg += std::to_string(e.line) + ":";
      msg += " " + e.message + "\n";
    }
    throw std::invalid_argument(msg);
  }
  return parsed.config;
}

int cmd_exhaust(const RunConfig& cfg) {
  const Domain dom = builtin_domain(cfg.domain);
  std::string csv = "k,num_cells,area,num_free_nodes\n";
  const GridSpec grid = make_grid(dom.bbox, cfg.K);
  for (int k = cfg.k_min; k <= cfg.resolved_k_max(); ++k) {
    const CellSet cells = build_cellset(dom, k);
    if (cells.empty())
      std::cerr << "exhaust: level k=" << k << " has an empty cell set\n";
    const NodeMask mask = node_masks(cells, grid, dom);
    csv += std::to_string(k) + "," + std::to_string(cells.count()) + "," +
           f(cells.area()) + "," + std::to_string(mask.free_count()) + "\n";
  }
  write_text_file(cfg.out + "/exhaust.csv", csv);
  return kExitOk;
}

int cmd_solve(const RunConfig& cfg) {
  const Domain dom = builtin_domain(cfg.domain);
  const BoundaryData data = builtin_data(cfg.data, dom);
  const GridSpec grid = make_grid(dom.bbox, cfg.K);
  const ScalarField phi = sample_phi(data, grid, dom);
  const NodeMask full = node_masks(build_cellset(dom, cfg.K), grid, dom);
  SolveOptions opts;
  opts.tol = cfg.tol;
  auto [u, rep] = solve_dirichlet(full, phi, opts);
  const double e = energy(u, inside_mask(grid, dom));

  write_text_file(cfg.out + "/field.txt", render_field_dump(u));
  nlohmann::json report{{"iterations", rep.iterations},
                        {"residual", rep.residual},
                        {"energy", e}};
  write_text_file(cfg.out + "/solve_report.json", report.dump(2) + "\n");
  if (cfg.emit_svg)
    write_text_file(cfg.out + "/field.svg",
                    render_svg_heatmap(u, inside_mask(grid, dom)));
  std::cout << "solve: " << cfg.domain << " / " << cfg.data << " K=" << cfg.K
            << " iterations=" << rep.iterations << " residual=" << rep.residual
            << " energy=" << e << "\n";
  return kExitOk;
}

int cmd_wos(const RunConfig& cfg, const std::vector<double>& inline_pts,
            const std::string& points_file) {
  const Domain dom = builtin_domain(cfg.domain);
  const BoundaryData data = builtin_data(cfg.data, dom);

  std::vector<Vec2> pts;
  for (std::size_t i = 0; i + 1 < inline_pts.size(); i += 2)
    pts.emplace_back(inline_pts[i], inline_pts[i + 1]);
  if (!points_file.empty()) {
    std::ifstream in(points_file);
    if (!in)
      throw std::runtime_error("cannot read points file '" + points_file + "'");
    double x, y;
    while (in >> x >> y) pts.emplace_back(x, y);
  }
  if (pts.empty())
    throw std::invalid_argument("no probe points given (use --point or --points)");

  WosConfig wcfg;
  wcfg.epsilon = cfg.epsilon;
  wcfg.n_walks = cfg.n_walks;
  wcfg.seed = cfg.seed;
  const std::vector<WosEstimate> est = wos_grid(dom, data.g, pts, wcfg);

  std::string csv = "x,y,mean,stderr,mean_steps,truncated\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    csv += f(pts[i].x()) + "," + f(pts[i].y()) + "," + f(est[i].mean) + "," +
           f(est[i].std_err) + "," + f(est[i].mean_steps) + "," +
           std::to_string(est[i].truncated_walks) + "\n";
    if (est[i].truncation_warning)
      std::cerr << "wos: more than 1% of walks truncated at (" << pts[i].x()
                << "," << pts[i].y() << ")\n";
  }
  write_text_file(cfg.out + "/wos.csv", csv);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  SuiteOptions opt;
  opt.K = cfg.K;
  opt.k_min = cfg.k_min;
  opt.k_max = cfg.k_max;
  opt.tol = cfg.tol;
  opt.epsilon = cfg.epsilon;
  opt.n_walks = cfg.n_walks;
  opt.seed = cfg.seed;
  opt.out_dir = cfg.out;
  opt.emit_svg = cfg.emit_svg;

  const VerifyRun run = run_suites({suite}, opt);
  int failed = 0;
  for (const SuiteOutcome& o : run.outcomes) {
    if (o.pass) {
      std::cout << "[ ok ] " << o.suite << " " << o.case_name
                << " worst=" << o.worst_metric << "\n";
    } else {
      std::cout << "[FAIL] " << o.suite << " " << o.case_name
                << " worst=" << o.worst_metric << "\n";
      ++failed;
    }
  }
  std::cout << run.outcomes.size() << " case(s), " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitAssertion;
}

int cmd_report(const RunConfig& cfg) {
  const std::string path = cfg.out + "/summary.json";
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "' (run verify first)");
  nlohmann::json rows;
  try {
    in >> rows;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed summary.json: " + std::string(e.what()));
  }
  int failed = 0;
  std::printf("%-12s %-40s %-6s %s\n", "suite", "case", "pass", "worst_metric");
  for (const auto& r : rows) {
    const bool pass = r.at("pass").get<bool>();
    if (!pass) ++failed;
    std::printf("%-12s %-40s %-6s %s\n",
                r.at("suite").get<std::string>().c_str(),
                r.at("case").get<std::string>().c_str(), pass ? "ok" : "FAIL",
                format_shortest(r.at("worst_metric").get<double>()).c_str());
  }
  std::printf("%zu case(s), %d failed\n", rows.size(), failed);
  return failed == 0 ? kExitOk : kExitAssertion;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{
      "Dyadic-grid Dirichlet laboratory: nested exhaustion energies, "
      "conjugate-gradient minimizers, walk-on-spheres cross-checks."};
  app.require_subcommand(1);

  struct Common {
    std::string config = "default";
    std::string out;
    std::uint64_t seed = 0;
    bool seed_set = false;
  };

  auto add_common = [&](CLI::App* sub, Common& c) {
    sub->add_option("--config", c.config,
                    "config file path, or 'default' for built-in defaults");
    sub->add_option("--out", c.out, "output directory (overrides config)");
    sub->add_option("--seed", c.seed, "RNG seed (overrides config)")
        ->each([&c](const std::string&) { c.seed_set = true; });
  };

  Common c_exhaust, c_solve, c_wos, c_verify, c_report;
  CLI::App* exhaust =
      app.add_subcommand("exhaust", "emit per-level cell/node counts");
  add_common(exhaust, c_exhaust);
  CLI::App* solve =
      app.add_subcommand("solve", "solve the full-domain Dirichlet problem");
  add_common(solve, c_solve);

  CLI::App* wos = app.add_subcommand(
      "wos", "walk-on-spheres boundary-data estimates at probe points");
  add_common(wos, c_wos);
  std::vector<double> wos_points;
  std::string wos_points_file;
  double wos_epsilon = 0;
  bool wos_eps_set = false;
  long wos_walks = 0;
  wos->add_option("--point", wos_points, "probe point x y (repeatable)")
      ->type_size(2);
  wos->add_option("--points", wos_points_file, "file of 'x y' rows");
  wos->add_option("--epsilon", wos_epsilon, "boundary shell half-width")
      ->each([&](const std::string&) { wos_eps_set = true; });
  wos->add_option("--walks", wos_walks, "number of walks per point");

  CLI::App* verify = app.add_subcommand(
      "verify", "run verification suites over the built-in corpus");
  add_common(verify, c_verify);
  std::string suite = "all";
  verify->add_option(
      "--suite", suite,
      "exhaustion | friedrichs | compare | boundary | hadamard | annulus | all");

  CLI::App* report =
      app.add_subcommand("report", "print the summary of a previous verify run");
  add_common(report, c_report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Common* c = exhaust->parsed()  ? &c_exhaust
                : solve->parsed()  ? &c_solve
                : wos->parsed()    ? &c_wos
                : verify->parsed() ? &c_verify
                                   : &c_report;
    RunConfig cfg = load_config_or_throw(c->config);
    if (!c->out.empty()) cfg.out = c->out;
    if (c->seed_set) cfg.seed = c->seed;

    if (exhaust->parsed()) return cmd_exhaust(cfg);
    if (solve->parsed()) return cmd_solve(cfg);
    if (wos->parsed()) {
      if (wos_eps_set) cfg.epsilon = wos_epsilon;
      if (wos_walks > 0) cfg.n_walks = wos_walks;
      return cmd_wos(cfg, wos_points, wos_points_file);
    }
    if (verify->parsed()) return cmd_verify(cfg, suite);
    return cmd_report(cfg);
  } catch (const SolveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertion;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what();
    if (std::string(e.what()).back() != '\n') std::cerr << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace dlab
