#pragma once

#include "kirchhoff/multigraph.hpp"
#include "kirchhoff/polynomial.hpp"
#include "kirchhoff/scalar.hpp"

#include <vector>

namespace kirchhoff {

/// Weighted Laplacian Q R^-1 Q^T, assembled exactly. Parallel edges add
/// their conductances.
RationalMatrix laplacian(const Multigraph& g);

/// Same matrix formed literally as the product of incidence, inverse
/// resistance and transposed incidence.
RationalMatrix laplacian_from_incidence(const Multigraph& g);

/// det(lambda I - m) by Faddeev-LeVerrier over big integers. Every division
/// in the scheme is exact for integer input. Throws NonIntegerMatrix.
Polynomial charpoly_exact(const RationalMatrix& m);
Polynomial charpoly_faddeev(const IntMatrix& m);

/// det(lambda I - m) by Bareiss determinants at nodes 0..n followed by exact
/// Newton forward-difference interpolation.
Polynomial charpoly_interpolated(const IntMatrix& m);

/// Eigenvalues in ascending order; multiplicities repeat.
struct Spectrum {
  std::vector<double> eigenvalues;

  std::size_t size() const { return eigenvalues.size(); }
  double operator[](std::size_t i) const { return eigenvalues[i]; }
};

struct JacobiOptions {
  double relative_tolerance = 1e-13;  // on off-diagonal Frobenius norm / ||m||_F
  int max_sweeps = 100;
};

/// Cyclic Jacobi eigensolver for symmetric input. Throws ConvergenceFailure
/// once max_sweeps is exhausted.
Spectrum eigenvalues(const Eigen::MatrixXd& m, const JacobiOptions& options = {});

/// Moore-Penrose inverse of a connected-graph Laplacian through the rank-one
/// shift (L + J/n)^-1 - J/n. Throws SingularShift when the shifted matrix is
/// not invertible, which happens exactly for disconnected graphs.
Eigen::MatrixXd pseudoinverse_laplacian(const Eigen::MatrixXd& laplacian);

}  // namespace kirchhoff
