#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dlab/boundary_data.hpp"
#include "dlab/domain.hpp"
#include "dlab/exhaust.hpp"
#include "dlab/field.hpp"
#include "dlab/solver.hpp"
#include "dlab/wos.hpp"

namespace dlab {

// ---------------------------------------------------------------------------
// Exhaustion ledger: nested minimizers against the full-domain minimizer.

struct LevelRecord {
  int k = 0;
  long num_cells = 0;
  double area = 0;  // num_cells * cell_size^2
  long num_free = 0;
  double E_k = 0;
  double gap = 0;               // E_k - E_full
  double midpoint_energy = 0;   // E((u_k + u_full)/2)
  double parallelogram_residual = 0;
  double grad_sq = 0;           // edge energy of u_k - u_full
  double l2_sq = 0;
  int iterations = 0;
  double residual = 0;
};

struct EnergyLedger {
  std::string domain, data;
  int K = 0;
  std::vector<LevelRecord> levels;
  double E_full = 0;  // energy of the level-K minimizer
  double E_ref = 0;   // first computed level's energy, the reference scale

  // Checks, with slack = 10 * tol * E_ref except where noted:
  bool monotone = true;       // E_{k+1} <= E_k + slack and E_full <= E_k + slack
  bool convexity = true;      // E(midpoint) >= E_full - slack
  bool parallelogram = true;  // residual <= 1e-12 * (E_k + E_full)
  bool galerkin = true;       // grad_sq/4 <= gap/2 + slack

  double worst_monotone = 0;       // max energy increase along the chain
  double worst_convexity = 0;      // max of E_full - E(midpoint)
  double worst_parallelogram = 0;  // max residual / (E_k + E_full)
  double worst_galerkin = 0;       // max of grad_sq/4 - gap/2

  bool pass() const { return monotone && convexity && parallelogram && galerkin; }
};

/// Solves the Dirichlet problem on every admissible class k = k_min..k_max
/// (masks built on the level-K grid, so minimizers nest exactly) plus the
/// full class k = K, and records energies, gaps and the identities above.
/// A level whose free set is empty keeps u_k = phi. Solver failures are
/// rethrown with the failing level prepended.
EnergyLedger run_exhaustion_suite(const Domain& domain,
                                  const BoundaryData& data, int K, int k_min,
                                  int k_max, double tol);

// ---------------------------------------------------------------------------
// Discrete Friedrichs inequality on a mask: h^2 sum w^2 <= L^2 * energy(w)
// for fields w supported on the free nodes, L the longer bbox side.

/// Max over n_fields random fields (uniform [-1,1] per free node, drawn
/// from SubStream(seed, field)) of (h^2 sum w^2) / (L^2 energy(w)).
/// A mask with no free nodes returns 0.
double friedrichs_worst_ratio(const NodeMask& mask, const GridSpec& grid,
                              const Domain& domain, int n_fields,
                              std::uint64_t seed);

// ---------------------------------------------------------------------------
// Minimizer vs walk-on-spheres comparison.

struct ProbeResult {
  Vec2 x;
  double u = 0;          // interpolated minimizer value
  double wos_mean = 0;
  double wos_std_err = 0;
  double error = 0;      // |u - wos_mean|
  double bound = 0;      // 3 * std_err + c_disc * h^2
  bool pass = false;
  bool skipped = false;  // probe closer than 10h to the boundary
  std::string note;
};

struct ComparisonReport {
  std::string domain, data;
  double h = 0;
  double c_disc = 0;
  std::vector<ProbeResult> probes;
  bool all_pass = true;  // over non-skipped probes
};

/// Solves the full-domain problem at level K and compares interpolated
/// values at the probes against wos_grid estimates of the boundary data.
/// c_disc scales the h^2 discretization term of the acceptance band.
ComparisonReport compare_minimizer_vs_perron(const Domain& domain,
                                             const BoundaryData& data, int K,
                                             const std::vector<Vec2>& probes,
                                             const WosConfig& wos,
                                             double c_disc);

// ---------------------------------------------------------------------------
// Boundary convergence: u along an inward ray approaches g at the foot.

struct BoundaryRow {
  double d = 0;          // distance from the boundary point
  double u = 0;          // interpolated minimizer at xi + d * inward
  double deviation = 0;  // |u - g(xi)|
};

struct BoundaryTable {
  std::string domain, data;
  Vec2 xi;
  double g_xi = 0;
  double osc = 0;             // oscillation of g over the boundary
  bool used_bisector = false; // xi sits on a corner; inward is the bisector
  std::vector<BoundaryRow> rows;
  bool decreasing = true;     // deviations strictly decrease
  bool final_ok = true;       // last deviation <= 0.05 * osc
  bool pass() const { return decreasing && final_ok; }
};

/// Probes u at xi + d * inward for d = diag * 2^-m, m = 2..6, where inward
/// is the inner sdf normal at xi (the angle bisector at corners). Requires
/// xi on the boundary (|sdf| <= 1e-9 * diag) and the probes inside.
BoundaryTable boundary_convergence_suite(const Domain& domain,
                                         const BoundaryData& data, int K,
                                         const Vec2& xi);

/// Deterministic boundary sample: sign-changing edges of a level-`level`
/// grid, bisected onto the zero set of the sdf.
std::vector<Vec2> sample_boundary(const Domain& domain, int level = 9);

/// max - min of g over sample_boundary points.
double boundary_oscillation(const Domain& domain,
                            const std::function<double(const Vec2&)>& g);

// ---------------------------------------------------------------------------
// Energy blow-up family: partial sums of a lacunary series on the disc.

struct HadamardRow {
  int M = 0;
  double discrete_energy = 0;
  double exact_energy = 0;
  double rel_error = 0;       // |discrete - exact| / exact
  double ratio_to_prev = 1;   // discrete_energy(M) / discrete_energy(M-1)
  double ratio_to_first = 1;  // discrete_energy(M) / discrete_energy(M_lo)
  int iterations = 0;
};

/// Full-domain solves on disc(1) for hadamard_partial(M), M = M_lo..M_hi.
/// Requires 1 <= M_lo <= M_hi <= 4 and a grid fine enough to resolve the
/// top mode: factorial(M_hi) * h <= 0.1.
std::vector<HadamardRow> hadamard_energy_growth(int M_lo, int M_hi, int K);

// ---------------------------------------------------------------------------
// Harmonic measure of the inner circle of an annulus: the radial log law.

struct AnnulusRow {
  double rho = 0;
  double exact = 0;        // log(1/r)/log(1/rho) at the probe radius r
  double u = 0;            // interpolated minimizer at (r, 0)
  double solver_rel_err = 0;
  double wos_mean = 0;
  double wos_std_err = 0;
  double wos_err = 0;      // |wos_mean - exact|
  bool solver_ok = false;  // solver_rel_err <= 2%
  bool wos_ok = false;     // wos_err <= 3 * std_err + 2% * exact
};

std::vector<AnnulusRow> annulus_measure_law(const std::vector<double>& rhos,
                                            double r_probe, int K,
                                            const WosConfig& wos);

// ---------------------------------------------------------------------------
// Fixed verification corpus and the suite driver.

struct CompareCase {
  std::string domain, data;
  std::vector<Vec2> probes;
};

struct BoundaryCase {
  std::string domain, data;
  Vec2 xi;
};

const std::vector<std::string>& exhaustion_domains();
const std::vector<std::string>& exhaustion_data();
const std::vector<CompareCase>& compare_corpus();
const std::vector<BoundaryCase>& boundary_corpus();

struct FriedrichsCase {
  std::string domain;
  double worst_ratio = 0;  // over masks k = k_min..K, 100 fields each
  long violations = 0;     // ratios > 1
  bool pass() const { return violations == 0; }
};

struct SuiteOptions {
  int K = 8;
  int k_min = 2;
  int k_max = -1;  // -1: K
  double tol = 1e-10;
  double epsilon = -1;  // -1: per-domain default
  long n_walks = 100000;
  std::uint64_t seed = 42;
  std::string out_dir;  // empty: write no files
  bool emit_svg = false;
};

/// One row of summary.json. worst_metric is the suite's tightest margin:
/// exhaustion: worst parallelogram residual ratio (threshold 1e-12);
/// friedrichs: worst Friedrichs ratio (threshold 1); compare: max
/// error/bound over probes (threshold 1); boundary: final deviation over
/// 0.05*osc (threshold 1); hadamard: max relative energy error (threshold
/// 0.1); annulus: max solver relative error over 0.02 (threshold 1).
struct SuiteOutcome {
  std::string suite;
  std::string case_name;
  bool pass = false;
  double worst_metric = 0;
};

struct VerifyRun {
  std::vector<EnergyLedger> exhaustion;
  std::vector<FriedrichsCase> friedrichs;
  std::vector<ComparisonReport> compare;
  std::vector<BoundaryTable> boundary;
  std::vector<HadamardRow> hadamard;
  std::vector<AnnulusRow> annulus;
  std::vector<SuiteOutcome> outcomes;
  bool all_pass = true;
};

/// Runs the named suites ("all" or any of exhaustion, friedrichs, compare,
/// boundary, hadamard, annulus) over the fixed corpus. The hadamard and
/// annulus suites need finer grids than the default and run at
/// max(options.K, 9) regardless of options.K. When out_dir is set, writes
/// per-case CSV tables and summary.json there (plus SVG snapshots of masks
/// and solutions when emit_svg is set).
VerifyRun run_suites(const std::set<std::string>& which,
                     const SuiteOptions& options);

}  // namespace dlab
