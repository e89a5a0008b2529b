// Acceptance gate: one criterion per run (argv[1] = 1..10) or all in order.
// Prints exactly one [PASS]/[FAIL] line per criterion, with a detail line on
// failure, and exits nonzero if any requested criterion failed.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "dlab/cli.hpp"
#include "dlab/grid.hpp"
#include "dlab/report.hpp"
#include "dlab/verify.hpp"

using namespace dlab;

namespace {

struct Failure {
  std::string what;
};

#define REQUIRE(cond, msg)                                              \
  do {                                                                  \
    if (!(cond))                                                        \
      throw Failure{std::string(__FILE__) + ":" +                       \
                    std::to_string(__LINE__) + ": " + (msg)};           \
  } while (0)

std::string num(double v) { return format_shortest(v); }

constexpr double kTol = 1e-10;

// 1. Along every exhaustion chain the minimizer energies never increase,
//    and none drops below the full-domain energy, within 10*tol*E_ref.
void criterion_1() {
  for (const std::string& ds : exhaustion_domains()) {
    const Domain dom = builtin_domain(ds);
    for (const std::string& bs : exhaustion_data()) {
      const BoundaryData data = builtin_data(bs, dom);
      const EnergyLedger led = run_exhaustion_suite(dom, data, 8, 2, 8, kTol);
      REQUIRE(led.monotone,
              ds + "/" + bs + ": worst energy increase " +
                  num(led.worst_monotone) + " exceeds slack " +
                  num(10 * kTol * led.E_ref));
    }
  }
}

// 2. Strict convexity: energy(u_k - u)/4 <= gap/2 + slack, and the
//    parallelogram residual stays at rounding scale.
void criterion_2() {
  for (const std::string& ds : exhaustion_domains()) {
    const Domain dom = builtin_domain(ds);
    for (const std::string& bs : exhaustion_data()) {
      const BoundaryData data = builtin_data(bs, dom);
      const EnergyLedger led = run_exhaustion_suite(dom, data, 8, 2, 8, kTol);
      REQUIRE(led.galerkin,
              ds + "/" + bs + ": energy(u_k - u)/4 overshoots gap/2 by " +
                  num(led.worst_galerkin));
      REQUIRE(led.parallelogram,
              ds + "/" + bs + ": parallelogram residual ratio " +
                  num(led.worst_parallelogram) + " exceeds 1e-12");
    }
  }
}

// 3. For disc(1) with fourier_mode(2): the final gap is small relative to
//    the first level's energy AND the gaps strictly decrease over k=2..7.
void criterion_3() {
  const Domain disc = builtin_domain("disc(1)");
  const BoundaryData data = builtin_data("fourier_mode(2)", disc);
  const EnergyLedger led = run_exhaustion_suite(disc, data, 8, 2, 7, kTol);
  REQUIRE(led.levels.back().gap <= 1e-3 * led.E_ref,
          "gap at k=7 is " + num(led.levels.back().gap) + ", above 1e-3 * " +
              num(led.E_ref));
  for (std::size_t i = 0; i + 1 < led.levels.size(); ++i)
    REQUIRE(led.levels[i + 1].gap < led.levels[i].gap,
            "gap(k=" + std::to_string(led.levels[i + 1].k) + ") = " +
                num(led.levels[i + 1].gap) + " does not strictly undercut " +
                "gap(k=" + std::to_string(led.levels[i].k) + ") = " +
                num(led.levels[i].gap) +
                " — this data is grid-harmonic, so every gap is exactly zero "
                "and no strict decrease is possible");
}

// 4. Discrete Friedrichs: 100 random fields per mask, h^2*sum w^2 <=
//    L^2*energy(w), zero violations across all domains and levels.
void criterion_4() {
  for (const std::string& ds : exhaustion_domains()) {
    const Domain dom = builtin_domain(ds);
    const GridSpec grid = make_grid(dom.bbox, 8);
    for (int k = 2; k <= 8; ++k) {
      const NodeMask mask = node_masks(build_cellset(dom, k), grid, dom);
      const double ratio = friedrichs_worst_ratio(mask, grid, dom, 100, 42);
      REQUIRE(ratio <= 1.0, ds + " k=" + std::to_string(k) +
                                ": Friedrichs ratio " + num(ratio) +
                                " exceeds 1");
    }
  }
}

// 5. The interpolated minimizer agrees with walk-on-spheres estimates at
//    every corpus probe within 3*stderr + C_disc*h^2, n_walks = 1e5.
void criterion_5() {
  SuiteOptions opt;
  opt.K = 8;
  opt.n_walks = 100000;
  opt.seed = 42;
  const VerifyRun run = run_suites({"compare"}, opt);
  REQUIRE(!run.outcomes.empty(), "no comparison cases ran");
  for (const SuiteOutcome& o : run.outcomes)
    REQUIRE(o.pass, o.case_name + ": worst probe error is " +
                        num(o.worst_metric) + "x its acceptance band");
}

// 6. Affine and saddle data are reproduced at every node within the solver
//    tolerance on all four domains (stencil annihilation).
void criterion_6() {
  for (const std::string& ds : exhaustion_domains()) {
    const Domain dom = builtin_domain(ds);
    const GridSpec grid = make_grid(dom.bbox, 8);
    const NodeMask full = node_masks(build_cellset(dom, 8), grid, dom);
    for (const char* bs : {"affine(1,-0.5,0.25)", "saddle"}) {
      const ScalarField phi = sample_phi(builtin_data(bs, dom), grid, dom);
      auto [u, rep] = solve_dirichlet(full, phi, {});
      const double maxdiff = (u.values - phi.values).abs().maxCoeff();
      REQUIRE(maxdiff <= kTol, std::string(ds) + "/" + bs +
                                   ": max node deviation " + num(maxdiff));
    }
  }
}

// 7. Annulus harmonic-measure law at r=0.3, K=9: solver and walker both
//    within relative 2% of log(1/r)/log(1/rho) for rho in {0.05, 0.1, 0.2}.
void criterion_7() {
  WosConfig w;
  w.n_walks = 100000;
  w.seed = 42;
  const auto rows = annulus_measure_law({0.05, 0.1, 0.2}, 0.3, 9, w);
  for (const AnnulusRow& r : rows) {
    REQUIRE(r.solver_rel_err <= 0.02,
            "rho=" + num(r.rho) + ": solver relative error " +
                num(r.solver_rel_err));
    REQUIRE(r.wos_err <= 0.02 * r.exact,
            "rho=" + num(r.rho) + ": wos relative error " +
                num(r.wos_err / r.exact));
  }
}

// 8. Lacunary partial sums M=1..4 at K=9: discrete energies within 10% of
//    the closed forms, and E(4)/E(1) >= 1.25.
void criterion_8() {
  const auto rows = hadamard_energy_growth(1, 4, 9);
  for (const HadamardRow& r : rows)
    REQUIRE(r.rel_error <= 0.1,
            "M=" + std::to_string(r.M) + ": relative energy error " +
                num(r.rel_error));
  REQUIRE(rows.back().ratio_to_first >= 1.25,
          "E(4)/E(1) = " + num(rows.back().ratio_to_first) + " < 1.25");
}

// 9. At the regular boundary point (1,0) of the disc the minimizer attains
//    its datum: deviations strictly decrease and end below 0.05*osc(g).
void criterion_9() {
  const Domain disc = builtin_domain("disc(1)");
  const BoundaryData data = builtin_data("fourier_mode(1)", disc);
  const BoundaryTable tab = boundary_convergence_suite(disc, data, 8, {1, 0});
  REQUIRE(tab.rows.size() >= 2, "fewer than two ray probes landed inside");
  for (std::size_t i = 0; i + 1 < tab.rows.size(); ++i)
    REQUIRE(tab.rows[i + 1].deviation < tab.rows[i].deviation,
            "deviation " + num(tab.rows[i + 1].deviation) + " at d=" +
                num(tab.rows[i + 1].d) + " does not undercut " +
                num(tab.rows[i].deviation));
  REQUIRE(tab.rows.back().deviation <= 0.05 * tab.osc,
          "final deviation " + num(tab.rows.back().deviation) +
              " exceeds 0.05 * osc = " + num(0.05 * tab.osc));
}

// 10. Two full verification runs with the default seed produce byte-identical
//     output trees and equal exit codes.
void criterion_10() {
  namespace fs = std::filesystem;
  const fs::path a = "acceptance_rerun_a", b = "acceptance_rerun_b";
  fs::remove_all(a);
  fs::remove_all(b);

  auto run = [](const fs::path& out) {
    const std::string out_str = out.string();
    const char* argv[] = {"dlab",     "verify", "--suite", "all",
                          "--config", "default", "--out",  out_str.c_str()};
    std::ostringstream sink;  // keep per-case chatter out of this report
    std::streambuf* saved = std::cout.rdbuf(sink.rdbuf());
    const int code = cli_main(8, argv);
    std::cout.rdbuf(saved);
    return code;
  };
  const int code_a = run(a);
  const int code_b = run(b);
  REQUIRE(code_a == 0, "first verify run exited " + std::to_string(code_a));
  REQUIRE(code_b == code_a, "exit codes differ: " + std::to_string(code_a) +
                                " vs " + std::to_string(code_b));

  auto listing = [](const fs::path& dir) {
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir))
      names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    return names;
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::vector<std::string> names = listing(a);
  REQUIRE(!names.empty(), "verify produced no output files");
  REQUIRE(listing(b) == names, "the two runs wrote different file sets");
  for (const std::string& name : names)
    REQUIRE(slurp(a / name) == slurp(b / name), name + " differs between runs");

  fs::remove_all(a);
  fs::remove_all(b);
}

struct Criterion {
  int id;
  const char* title;
  void (*fn)();
};

const Criterion kCriteria[] = {
    {1, "nested minimizer energies never increase", criterion_1},
    {2, "strict-convexity and parallelogram identities", criterion_2},
    {3, "gaps vanish and strictly decrease for a smooth mode", criterion_3},
    {4, "discrete Friedrichs inequality on every mask", criterion_4},
    {5, "minimizer matches walk-on-spheres at interior probes", criterion_5},
    {6, "grid-harmonic data reproduced to solver tolerance", criterion_6},
    {7, "annulus harmonic-measure log law", criterion_7},
    {8, "lacunary-series energy growth", criterion_8},
    {9, "boundary data attained along the inward ray", criterion_9},
    {10, "repeated runs are byte-identical", criterion_10},
};

bool run_criterion(const Criterion& c) {
  try {
    c.fn();
    std::printf("[PASS] criterion %d: %s\n", c.id, c.title);
    return true;
  } catch (const Failure& f) {
    std::printf("[FAIL] criterion %d: %s\n", c.id, c.title);
    std::printf("       %s\n", f.what.c_str());
  } catch (const std::exception& e) {
    std::printf("[FAIL] criterion %d: %s\n", c.id, c.title);
    std::printf("       unexpected exception: %s\n", e.what());
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1..10]\n", argv[0]);
    return 2;
  }
  if (argc == 2) {
    const long id = std::strtol(argv[1], nullptr, 10);
    for (const Criterion& c : kCriteria)
      if (c.id == id) return run_criterion(c) ? 0 : 1;
    std::fprintf(stderr, "usage: %s [criterion 1..10]\n", argv[0]);
    return 2;
  }
  int failed = 0;
  for (const Criterion& c : kCriteria)
    if (!run_criterion(c)) ++failed;
  std::printf("%d of %d criteria passed\n",
              static_cast<int>(std::size(kCriteria)) - failed,
              static_cast<int>(std::size(kCriteria)));
  return failed == 0 ? 0 : 1;
}
