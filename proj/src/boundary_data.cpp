#include "dlab/boundary_data.hpp"

#include <cmath>
#include <stdexcept>

namespace dlab {

namespace {

double int_arg(const NameSpec& ns, std::size_t i, int lo, int hi,
               const char* what) {
  const double v = ns.args.at(i);
  if (v != std::floor(v) || v < lo || v > hi)
    throw std::invalid_argument(std::string(what) + " must be an integer in [" +
                                std::to_string(lo) + "," + std::to_string(hi) +
                                "]");
  return v;
}

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

namespace {

void z_power(const Vec2& p, int m, double& re, double& im) {
  re = 1.0;
  im = 0.0;
  for (int k = 0; k < m; ++k) {
    const double t = re * p.x() - im * p.y();
    im = re * p.y() + im * p.x();
    re = t;
  }
}

}  // namespace

double re_power(const Vec2& p, int m) {
  double re, im;
  z_power(p, m, re, im);
  return re;
}

double im_power(const Vec2& p, int m) {
  double re, im;
  z_power(p, m, re, im);
  return im;
}

double hadamard_exact_energy(int M) {
  if (M < 1 || M > 7)
    throw std::invalid_argument("hadamard partial sum order must be in [1,7]");
  double s = 0;
  for (int n = 1; n <= M; ++n) {
    const double fn = factorial(n);
    s += fn / (static_cast<double>(n) * n * n * n);
  }
  return M_PI * s;
}

BoundaryData builtin_data(const std::string& spec, const Domain& domain) {
  NameSpec ns = parse_name_spec(spec);
  BoundaryData bd;
  bd.name = spec;

  auto want_args = [&](std::size_t n) {
    if (ns.args.size() != n)
      throw std::invalid_argument("data '" + ns.name + "' takes " +
                                  std::to_string(n) + " argument(s), got " +
                                  std::to_string(ns.args.size()));
  };
  const std::string dom_base = parse_name_spec(domain.name).name;

  if (ns.name == "constant") {
    want_args(1);
    const double c = ns.args[0];
    auto f = [c](const Vec2&) { return c; };
    bd.g = f;
    bd.phi = f;
    bd.analytic = f;
  } else if (ns.name == "affine") {
    want_args(3);
    const double a = ns.args[0], b = ns.args[1], c = ns.args[2];
    auto f = [a, b, c](const Vec2& p) { return a * p.x() + b * p.y() + c; };
    bd.g = f;
    bd.phi = f;
    bd.analytic = f;
  } else if (ns.name == "saddle") {
    want_args(0);
    auto f = [](const Vec2& p) { return p.x() * p.x() - p.y() * p.y(); };
    bd.g = f;
    bd.phi = f;
    bd.analytic = f;
  } else if (ns.name == "fourier_mode") {
    want_args(1);
    const int m = static_cast<int>(int_arg(ns, 0, 0, 64, "fourier mode"));
    auto f = [m](const Vec2& p) { return re_power(p, m); };
    bd.g = f;
    bd.phi = f;
    bd.analytic = f;
  } else if (ns.name == "annulus_indicator") {
    want_args(0);
    if (dom_base != "annulus")
      throw std::invalid_argument(
          "annulus_indicator requires an annulus domain, got '" + domain.name +
          "'");
    const double rho = domain.params.at(0);
    bd.g = [rho](const Vec2& p) {
      return p.norm() < 0.5 * (rho + 1.0) ? 1.0 : 0.0;
    };
    // the closed-form harmonic solution doubles as the extension: it is
    // continuous on the closed ring, has finite energy 2*pi/log(1/rho),
    // and restricts to the indicator on both boundary circles
    auto law = [rho](const Vec2& p) {
      const double t = std::log(p.norm()) / std::log(rho);
      return std::min(1.0, std::max(0.0, t));
    };
    bd.phi = law;
    bd.analytic = law;
  } else if (ns.name == "hadamard_partial") {
    want_args(1);
    const int M =
        static_cast<int>(int_arg(ns, 0, 1, 7, "hadamard partial sum order"));
    if (dom_base != "disc" || domain.params.at(0) != 1.0)
      throw std::invalid_argument(
          "hadamard_partial requires the domain disc(1), got '" + domain.name +
          "'");
    auto f = [M](const Vec2& p) {
      // phi_M(r, theta) = sum n^-2 r^(n!) sin(n! theta) = sum n^-2 Im(z^n!)
      double s = 0;
      for (int n = 1; n <= M; ++n)
        s += im_power(p, static_cast<int>(factorial(n))) /
             (static_cast<double>(n) * n);
      return s;
    };
    bd.g = f;
    bd.phi = f;
    bd.analytic = f;
  } else {
    throw std::invalid_argument(
        "unknown data '" + ns.name +
        "'; valid: constant(c), affine(a,b,c), saddle, fourier_mode(m), "
        "annulus_indicator, hadamard_partial(M)");
  }
  return bd;
}

}  // namespace dlab
