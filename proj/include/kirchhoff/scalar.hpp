#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace kirchhoff {

// Expression templates are disabled so the scalars behave like plain value
// types inside Eigen kernels.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntMatrix = Matrix<BigInt>;

/// Renders p/q in lowest terms, or just p when q == 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Parses "p/q", an integer, or a plain decimal such as "0.125" exactly.
/// Throws Error{ErrorKind::Parse} on malformed text.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

bool is_integer(const Rational& r);

/// One-way rational -> float64 view of a matrix.
Eigen::MatrixXd to_float(const RationalMatrix& m);

/// Least common multiple of all entry denominators.
BigInt common_denominator(const RationalMatrix& m);

/// Entrywise conversion; throws Error{ErrorKind::NonIntegerMatrix} unless every
/// entry has denominator 1.
IntMatrix to_integer_matrix(const RationalMatrix& m);

RationalMatrix to_rational_matrix(const IntMatrix& m);

}  // namespace kirchhoff
