#pragma once

#include "kirchhoff/multigraph.hpp"
#include "kirchhoff/scalar.hpp"

#include <string>

namespace kirchhoff {

// Resistance distance and Kirchhoff index. Every entry point requires a
// connected graph and throws Error{Disconnected} otherwise.

/// (u_i - u_j)^T L^+ (u_i - u_j).
double resistance_pinv(const Multigraph& g, const std::string& u, const std::string& v);

/// det L(i,j|i,j) / det L(i|i), exact.
Rational resistance_det(const Multigraph& g, const std::string& u, const std::string& v);

/// All-pairs resistance matrix from a single pseudoinverse.
Eigen::MatrixXd resistance_matrix(const Multigraph& g);

/// n * sum of reciprocal nonzero Laplacian eigenvalues.
double kirchhoff_eigen(const Multigraph& g);

/// n * |a2 / a1| from the exact characteristic polynomial. Rational
/// Laplacians are scaled by their common denominator d first and the result
/// multiplied back by d.
Rational kirchhoff_poly(const Multigraph& g);

/// Sum of resistance distances over unordered pairs, per pair via L^+.
double kirchhoff_pairs_pinv(const Multigraph& g);

/// Sum of resistance distances over unordered pairs, per pair via minors.
Rational kirchhoff_pairs_det(const Multigraph& g);

/// Sum over tree edges of r_e * |side A| * |side B|. Throws NotATree.
Rational kirchhoff_tree(const Multigraph& g);

struct KirchhoffReport {
  std::size_t order = 0;
  double kf_eigen = 0;
  Rational kf_poly;
  double kf_pairs = 0;
  double method_spread = 0;  // max pairwise |difference|
};

KirchhoffReport kirchhoff_report(const Multigraph& g);

}  // namespace kirchhoff
