#include "dlab/solver.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace dlab {

namespace {

struct System {
  std::vector<int> fi, fj;              // free node coordinates
  Eigen::ArrayXi idx;                   // (i + j*nx) -> free index or -1
  Eigen::Array<int, Eigen::Dynamic, 4> nb;  // free-neighbor indices or -1
  VectorXd b;
};

System gather(const NodeMask& mask, const ScalarField& phi) {
  const int nx = phi.grid.nx, ny = phi.grid.ny;
  if (mask.free.rows() != nx || mask.free.cols() != ny)
    throw std::invalid_argument("mask and field shapes differ");

  System s;
  s.idx = Eigen::ArrayXi::Constant(nx * ny, -1);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (mask.free(i, j)) {
        s.idx(i + j * nx) = static_cast<int>(s.fi.size());
        s.fi.push_back(i);
        s.fj.push_back(j);
      }

  const long n = static_cast<long>(s.fi.size());
  s.nb.resize(n, 4);
  s.b = VectorXd::Zero(n);
  const int di[4] = {-1, 1, 0, 0};
  const int dj[4] = {0, 0, -1, 1};
  for (long r = 0; r < n; ++r) {
    const int i = s.fi[r], j = s.fj[r];
    if (i == 0 || j == 0 || i == nx - 1 || j == ny - 1)
      throw std::invalid_argument("free node on the grid border at (" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  ")");
    for (int d = 0; d < 4; ++d) {
      const int ni = i + di[d], nj = j + dj[d];
      if (mask.exterior(ni, nj))
        throw std::invalid_argument("free node adjacent to an exterior node at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      const int k = s.idx(ni + nj * nx);
      s.nb(r, d) = k;
      if (k < 0) s.b(r) += phi.values(ni, nj);  // clamped neighbor
    }
  }
  return s;
}

VectorXd apply(const System& s, const VectorXd& x) {
  const long n = x.size();
  VectorXd y(n);
  for (long r = 0; r < n; ++r) {
    double acc = 4.0 * x(r);
    for (int d = 0; d < 4; ++d) {
      const int k = s.nb(r, d);
      if (k >= 0) acc -= x(k);
    }
    y(r) = acc;
  }
  return y;
}

}  // namespace

std::pair<ScalarField, SolveReport> solve_dirichlet(const NodeMask& mask,
                                                    const ScalarField& phi,
                                                    const SolveOptions& opts) {
  ScalarField out = phi;
  SolveReport rep;
  if (mask.free.count() == 0) return {out, rep};

  const System s = gather(mask, phi);
  const long n = s.b.size();
  const int max_iter = opts.max_iter >= 0
                           ? opts.max_iter
                           : 50 * std::max(phi.grid.nx, phi.grid.ny);

  VectorXd x(n);
  const ScalarField* start = opts.warm_start ? opts.warm_start : &phi;
  if (!(start->grid == phi.grid))
    throw std::invalid_argument("warm start lives on a different grid");
  for (long r = 0; r < n; ++r) x(r) = start->values(s.fi[r], s.fj[r]);

  const double norm_b = s.b.norm();
  const double denom = norm_b > 0 ? norm_b : 1.0;

  VectorXd r = s.b - apply(s, x);
  double rnorm = r.norm();
  if (rnorm > opts.tol * denom) {
    VectorXd z = r / 4.0;
    VectorXd p = z;
    double rho = r.dot(z);
    while (true) {
      if (rep.iterations >= max_iter)
        throw SolveError("dirichlet solve did not converge within " +
                             std::to_string(max_iter) +
                             " iterations (relative residual " +
                             std::to_string(rnorm / denom) + ")",
                         rep.iterations, rnorm / denom);
      const VectorXd q = apply(s, p);
      const double alpha = rho / p.dot(q);
      x += alpha * p;
      r -= alpha * q;
      ++rep.iterations;
      rnorm = r.norm();
      if (rnorm <= opts.tol * denom) break;
      z = r / 4.0;
      const double rho_new = r.dot(z);
      p = z + (rho_new / rho) * p;
      rho = rho_new;
    }
  }

  for (long k = 0; k < n; ++k) out.values(s.fi[k], s.fj[k]) = x(k);
  rep.residual = (s.b - apply(s, x)).norm() / denom;
  return {out, rep};
}

}  // namespace dlab
