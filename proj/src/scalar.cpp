#include "kirchhoff/scalar.hpp"

#include "kirchhoff/error.hpp"


#include <cctype>

namespace kirchhoff {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NonPositiveResistance: return "NonPositiveResistance";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::NonIntegerMatrix: return "NonIntegerMatrix";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::SingularShift: return "SingularShift";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::SingularA: return "SingularA";
    case ErrorKind::NotSymmetricBlocks: return "NotSymmetricBlocks";
    case ErrorKind::NotYangYuForm: return "NotYangYuForm";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
  }
  return "Error";
}

std::string to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& z) { return z.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_unsigned(std::string_view s) { return BigInt(std::string(s)); }

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw Error(ErrorKind::Parse, "malformed rational '" + original + "'");
    const BigInt d = parse_unsigned(den);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + original + "'");
    value = Rational(parse_unsigned(num), d);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw Error(ErrorKind::Parse, "malformed decimal '" + original + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const BigInt w = whole.empty() ? BigInt(0) : parse_unsigned(whole);
    const BigInt f = frac.empty() ? BigInt(0) : parse_unsigned(frac);
    value = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(text)) throw Error(ErrorKind::Parse, "malformed number '" + original + "'");
    value = Rational(parse_unsigned(text));
  }
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Eigen::MatrixXd to_float(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

BigInt common_denominator(const RationalMatrix& m) {
  BigInt l = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
  return l;
}

IntMatrix to_integer_matrix(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j)))
        throw Error(ErrorKind::NonIntegerMatrix,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + to_string(m(i, j)));
      out(i, j) = numerator(m(i, j));
    }
  return out;
}

RationalMatrix to_rational_matrix(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace kirchhoff
