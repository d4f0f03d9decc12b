#pragma once

#include "kirchhoff/scalar.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace kirchhoff {

/// Fraction-free (Bareiss) elimination with row pivoting on zero pivots.
/// Exact for any integral domain scalar with exact division (BigInt,
/// Rational). Returns 1 for the empty matrix.
template <typename Derived>
typename Derived::Scalar determinant_bareiss(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(input.rows() == input.cols());
  Matrix<Scalar> a = input;
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Cofactor (Laplace) expansion along the first row. Only sensible for small
/// orders; used for adjugates of blocks up to 4x4.
template <typename Derived>
typename Derived::Scalar determinant_laplace(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Scalar total(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    Matrix<Scalar> sub(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) sub(r - 1, cc++) = a(r, c);
    const Scalar term = a(0, j) * determinant_laplace(sub);
    total = (j % 2 == 0) ? Scalar(total + term) : Scalar(total - term);
  }
  return total;
}

/// Removes the listed rows and columns (each list sorted or not).
template <typename Derived>
Matrix<typename Derived::Scalar> delete_rows_cols(const Eigen::MatrixBase<Derived>& a,
                                                   const std::vector<Eigen::Index>& rows,
                                                   const std::vector<Eigen::Index>& cols) {
  auto keep = [](Eigen::Index total, const std::vector<Eigen::Index>& drop) {
    std::vector<Eigen::Index> k;
    for (Eigen::Index i = 0; i < total; ++i)
      if (std::find(drop.begin(), drop.end(), i) == drop.end()) k.push_back(i);
    return k;
  };
  const auto kr = keep(a.rows(), rows);
  const auto kc = keep(a.cols(), cols);
  Matrix<typename Derived::Scalar> out(static_cast<Eigen::Index>(kr.size()), static_cast<Eigen::Index>(kc.size()));
  for (std::size_t i = 0; i < kr.size(); ++i)
    for (std::size_t j = 0; j < kc.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(kr[i], kc[j]);
  return out;
}

/// Transposed cofactor matrix, total even for singular input. Minors use
/// Laplace expansion for order <= 4 and Bareiss above.
template <typename Derived>
Matrix<typename Derived::Scalar> adjugate(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(a.rows() == a.cols());
  const Eigen::Index n = a.rows();
  Matrix<Scalar> adj(n, n);
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto minor = delete_rows_cols(a, {j}, {i});
      Scalar m = n <= 4 ? determinant_laplace(minor) : determinant_bareiss(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? m : Scalar(-m);
    }
  return adj;
}

inline Rational determinant_exact(const RationalMatrix& m) { return determinant_bareiss(m); }

/// LU with partial pivoting; 0.0 for numerically singular input.
double determinant_float(const Eigen::MatrixXd& m);

}  // namespace kirchhoff
