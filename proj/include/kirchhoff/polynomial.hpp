#pragma once

#include "kirchhoff/scalar.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace kirchhoff {

/// Dense univariate polynomial with big-integer coefficients in ascending
/// degree order. The zero polynomial is stored as {0}.
class Polynomial {
 public:
  Polynomial() : coeffs_{BigInt(0)} {}
  explicit Polynomial(std::vector<BigInt> ascending);
  Polynomial(std::initializer_list<long long> ascending);

  /// lambda - root
  static Polynomial linear_root(const BigInt& root);
  static Polynomial constant(const BigInt& c);

  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// Coefficient of lambda^k, zero beyond the degree.
  BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt operator()(const BigInt& x) const;
  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const BigInt& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const BigInt& s) { return a *= s; }
  friend Polynomial operator*(const BigInt& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  struct DivResult;
  /// Division by a monic divisor; quotient and remainder stay integral.
  DivResult divmod_monic(const Polynomial& divisor) const;

  /// "c0 c1 ... cn"
  std::string to_ascending_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct Polynomial::DivResult {
  Polynomial quotient;
  Polynomial remainder;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace kirchhoff
