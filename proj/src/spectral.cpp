#include "kirchhoff/spectral.hpp"

#include "kirchhoff/determinant.hpp"
#include "kirchhoff/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kirchhoff {

RationalMatrix laplacian(const Multigraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  RationalMatrix l = RationalMatrix::Zero(n, n);
  for (const auto& e : g.edges()) {
    const Rational c = e.conductance();
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    l(u, u) += c;
    l(v, v) += c;
    l(u, v) -= c;
    l(v, u) -= c;
  }
  return l;
}

RationalMatrix laplacian_from_incidence(const Multigraph& g) {
  const Eigen::MatrixXi q = incidence(g);
  RationalMatrix qr(q.rows(), q.cols());
  for (Eigen::Index i = 0; i < q.rows(); ++i)
    for (Eigen::Index j = 0; j < q.cols(); ++j) qr(i, j) = Rational(q(i, j));
  const RationalVector c = conductances(g);
  if (q.cols() == 0) return RationalMatrix::Zero(q.rows(), q.rows());
  return RationalMatrix(qr * c.asDiagonal() * qr.transpose());
}

Polynomial charpoly_exact(const RationalMatrix& m) { return charpoly_faddeev(to_integer_matrix(m)); }

Polynomial charpoly_faddeev(const IntMatrix& a) {
  eigen_assert(a.rows() == a.cols());
  const Eigen::Index n = a.rows();
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    next.diagonal().array() += c[static_cast<std::size_t>(n - k + 1)];
    m = std::move(next);
    const BigInt tr = (a * m).trace();
    BigInt q, r;
    boost::multiprecision::divide_qr(BigInt(-tr), BigInt(k), q, r);
    eigen_assert(r == 0);
    c[static_cast<std::size_t>(n - k)] = q;
  }
  return Polynomial(std::move(c));
}

Polynomial charpoly_interpolated(const IntMatrix& a) {
  eigen_assert(a.rows() == a.cols());
  const Eigen::Index n = a.rows();
  const auto nodes = static_cast<std::size_t>(n) + 1;
  std::vector<BigInt> diff(nodes);
  for (std::size_t t = 0; t < nodes; ++t) {
    IntMatrix shifted = -a;
    shifted.diagonal().array() += BigInt(static_cast<long>(t));
    diff[t] = determinant_bareiss(shifted);
  }
  // Newton form sum_k (Delta^k P(0) / k!) * t(t-1)...(t-k+1); the quotients
  // are integral for integer-valued polynomials with integer coefficients.
  Polynomial result = Polynomial::constant(diff[0]);
  Polynomial falling = Polynomial::constant(BigInt(1));
  BigInt factorial = 1;
  for (std::size_t k = 1; k < nodes; ++k) {
    for (std::size_t t = 0; t + k < nodes; ++t) diff[t] = diff[t + 1] - diff[t];
    falling = falling * Polynomial::linear_root(BigInt(static_cast<long>(k - 1)));
    factorial *= static_cast<long>(k);
    BigInt q, r;
    boost::multiprecision::divide_qr(diff[0], factorial, q, r);
    eigen_assert(r == 0);
    result += falling * q;
  }
  return result;
}

Spectrum eigenvalues(const Eigen::MatrixXd& input, const JacobiOptions& options) {
  eigen_assert(input.rows() == input.cols());
  Eigen::MatrixXd a = input;
  const Eigen::Index n = a.rows();
  const double scale = a.norm();
  auto off_norm = [&] {
    double s = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };
  int sweep = 0;
  while (scale > 0 && off_norm() >= options.relative_tolerance * scale) {
    if (sweep++ == options.max_sweeps)
      throw Error(ErrorKind::ConvergenceFailure,
                  "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  Spectrum out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out.eigenvalues[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

Eigen::MatrixXd pseudoinverse_laplacian(const Eigen::MatrixXd& l) {
  eigen_assert(l.rows() == l.cols());
  const Eigen::Index n = l.rows();
  const Eigen::MatrixXd j = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(l + j);
  if (!lu.isInvertible()) throw Error(ErrorKind::SingularShift, "L + J/n is singular; graph is disconnected");
  Eigen::MatrixXd pinv = lu.inverse() - j;
  // Symmetrize away rounding asymmetry.
  return 0.5 * (pinv + pinv.transpose());
}

double determinant_float(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 1.0;
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double cutoff = std::numeric_limits<double>::epsilon() * static_cast<double>(m.rows()) * pivots.maxCoeff();
  if (pivots.minCoeff() <= cutoff) return 0.0;
  const double d = lu.determinant();
  return std::isfinite(d) ? d : 0.0;
}

}  // namespace kirchhoff
