#pragma once

#include <stdexcept>
#include <utility>

#include "dlab/exhaust.hpp"
#include "dlab/field.hpp"

namespace dlab {

struct SolveOptions {
  double tol = 1e-10;  // relative residual target, ||b - Au|| <= tol * ||b||
  int max_iter = -1;   // -1: 50 * max(nx, ny)
  const ScalarField* warm_start = nullptr;  // same grid; free values reused
};

struct SolveReport {
  int iterations = 0;
  double residual = 0;  // true relative residual, recomputed after the loop
};

/// Thrown when CG hits the iteration cap before reaching the tolerance.
struct SolveError : std::runtime_error {
  SolveError(const std::string& msg, int iters, double rel)
      : std::runtime_error(msg), iterations(iters), residual(rel) {}
  int iterations;
  double residual;
};

/// Minimizes the discrete Dirichlet energy over fields that agree with phi
/// off the free set: conjugate gradients on the 5-point Laplacian over the
/// free nodes, Jacobi preconditioned (the diagonal is the constant 4).
/// Off the free set the result keeps phi's values. With no free nodes the
/// input is returned unchanged. The default initial guess is phi itself,
/// so data whose stencil residual vanishes converge in zero iterations.
std::pair<ScalarField, SolveReport> solve_dirichlet(
    const NodeMask& mask, const ScalarField& phi, const SolveOptions& opts = {});

}  // namespace dlab
