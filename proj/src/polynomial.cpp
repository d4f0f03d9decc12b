#include "kirchhoff/polynomial.hpp"

#include "kirchhoff/error.hpp"

#include <ostream>

namespace kirchhoff {

Polynomial::Polynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  if (coeffs_.empty()) coeffs_.push_back(BigInt(0));
  trim();
}

Polynomial::Polynomial(std::initializer_list<long long> ascending) {
  for (auto c : ascending) coeffs_.emplace_back(c);
  if (coeffs_.empty()) coeffs_.push_back(BigInt(0));
  trim();
}

Polynomial Polynomial::linear_root(const BigInt& root) { return Polynomial(std::vector<BigInt>{-root, BigInt(1)}); }

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial(std::vector<BigInt>{c}); }

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial::DivResult Polynomial::divmod_monic(const Polynomial& divisor) const {
  if (divisor.leading() != 1) throw Error(ErrorKind::InvalidParameter, "divisor is not monic");
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = divisor.degree();
  if (rem.size() <= dd) return {Polynomial(), *this};
  std::vector<BigInt> quot(rem.size() - dd, BigInt(0));
  for (std::size_t k = rem.size(); k-- > dd;) {
    const BigInt c = rem[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= c * divisor.coeffs_[j];
  }
  rem.resize(dd == 0 ? 1 : dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_ascending_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ' ';
    s += coeffs_[i].str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_ascending_string(); }

}  // namespace kirchhoff
