#pragma once

#include <functional>
#include <string>

#include "dlab/domain.hpp"
#include "dlab/types.hpp"

namespace dlab {

/// Boundary values g together with a continuous finite-energy extension
/// phi defined on the closure of the domain. Where the harmonic solution
/// is known in closed form it is carried along as `analytic`.
struct BoundaryData {
  std::string name;
  std::function<double(const Vec2&)> g;
  std::function<double(const Vec2&)> phi;
  std::function<double(const Vec2&)> analytic;  // empty if unknown

  bool has_analytic() const { return static_cast<bool>(analytic); }
};

/// Real/imaginary part of z^m for z = x + iy, computed by iterated complex
/// multiplication (no pow/atan2), so dyadic inputs stay exact for small m.
double re_power(const Vec2& p, int m);
double im_power(const Vec2& p, int m);

/// Builds one of the built-in data families on the given domain:
///   constant(c)
///   affine(a,b,c)          a*x + b*y + c
///   saddle                 x^2 - y^2
///   fourier_mode(m)        Re((x+iy)^m), m >= 0
///   annulus_indicator      1 on the inner circle, 0 on the outer
///                          (annulus domains only; phi and analytic are
///                          both the radial log law log(r)/log(rho))
///   hadamard_partial(M)    sum_{n<=M} n^-2 * r^(n!) sin(n! theta),
///                          1 <= M <= 7 (disc(1) only)
///
/// phi always agrees with g on the boundary. Throws std::invalid_argument
/// for unknown names, bad parameters, or a data/domain mismatch.
BoundaryData builtin_data(const std::string& spec, const Domain& domain);

/// Exact Dirichlet energy of the hadamard_partial(M) harmonic extension on
/// the unit disc: pi * sum_{n<=M} n!/n^4.
double hadamard_exact_energy(int M);

}  // namespace dlab
