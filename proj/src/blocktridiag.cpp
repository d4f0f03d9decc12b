#include "kirchhoff/blocktridiag.hpp"

#include "kirchhoff/determinant.hpp"
#include "kirchhoff/error.hpp"
#include "kirchhoff/spectral.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace kirchhoff {

void BlockTriSpec::validate() const {
  if (blocks.empty()) throw Error(ErrorKind::InvalidParameter, "block tridiagonal spec needs n >= 1 blocks");
  if (couplings.size() + 1 != blocks.size())
    throw Error(ErrorKind::InvalidParameter, std::to_string(blocks.size()) + " blocks need " +
                                                 std::to_string(blocks.size() - 1) + " couplings, got " +
                                                 std::to_string(couplings.size()));
}

RationalMatrix expand_blocktri(const BlockTriSpec& spec) {
  spec.validate();
  const auto n = static_cast<Eigen::Index>(spec.size());
  RationalMatrix m = RationalMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& b = spec.blocks[static_cast<std::size_t>(i)];
    m(2 * i, 2 * i) = b.a;
    m(2 * i, 2 * i + 1) = b.b;
    m(2 * i + 1, 2 * i) = b.c;
    m(2 * i + 1, 2 * i + 1) = b.d;
    if (i + 1 < n) {
      const auto& c = spec.couplings[static_cast<std::size_t>(i)];
      m.block(2 * i, 2 * i + 2, 2, 2).setConstant(c.p);
      m.block(2 * i + 2, 2 * i, 2, 2).setConstant(c.q);
    }
  }
  return m;
}

Rational det_schur(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                   const RationalMatrix& d) {
  if (a.rows() != a.cols() || d.rows() != d.cols() || b.rows() != a.rows() || b.cols() != d.cols() ||
      c.rows() != d.rows() || c.cols() != a.cols())
    throw Error(ErrorKind::ShapeMismatch, "blocks do not tile a square matrix");
  const Rational det_a = determinant_exact(a);
  if (det_a == 0) throw Error(ErrorKind::SingularA, "leading block is singular");
  const RationalMatrix a_inv = adjugate(a) / det_a;
  const RationalMatrix schur = d - c * a_inv * b;
  return det_a * determinant_exact(schur);
}

Rational det_bordered(const RationalMatrix& a, const RationalVector& x, const RationalVector& y, const Rational& d) {
  if (a.rows() != a.cols() || x.size() != a.rows() || y.size() != a.rows())
    throw Error(ErrorKind::ShapeMismatch, "bordered determinant shapes disagree");
  if (a.rows() == 0) return d;
  return d * determinant_exact(a) - (y.transpose() * adjugate(a) * x)(0, 0);
}

Rational det_rank1_update(const RationalMatrix& a, const RationalVector& x, const RationalVector& y) {
  if (a.rows() != a.cols() || x.size() != a.rows() || y.size() != a.rows())
    throw Error(ErrorKind::ShapeMismatch, "rank-one update shapes disagree");
  if (a.rows() == 0) return Rational(1);
  return determinant_exact(a) + (y.transpose() * adjugate(a) * x)(0, 0);
}

Rational det_ones_coupled(const RationalMatrix& a, const RationalMatrix& b, const Rational& p, const Rational& q) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() == 0 || b.rows() == 0)
    throw Error(ErrorKind::ShapeMismatch, "diagonal blocks must be square and nonempty");
  return determinant_exact(a) * determinant_exact(b) - p * q * adjugate(a).sum() * adjugate(b).sum();
}

DetSequence det_blocktri_recurrence(const BlockTriSpec& spec) {
  spec.validate();
  const auto& A = spec.blocks;
  DetSequence g;
  g.values.reserve(spec.size());
  g.values.push_back(A[0].det());
  if (spec.size() >= 2) {
    const auto& c = spec.couplings[0];
    g.values.push_back(A[0].det() * A[1].det() - c.p * c.q * A[0].t() * A[1].t());
  }
  for (std::size_t k = 2; k < spec.size(); ++k) {
    const auto& c = spec.couplings[k - 1];
    g.values.push_back(A[k].det() * g.values[k - 1] - c.p * c.q * A[k].t() * A[k - 1].t() * g.values[k - 2]);
  }
  return g;
}

DetSequence det_tridiag_recurrence(const std::vector<Rational>& diag, const std::vector<Rational>& super,
                                   const std::vector<Rational>& sub) {
  if (diag.empty() || super.size() + 1 != diag.size() || sub.size() + 1 != diag.size())
    throw Error(ErrorKind::InvalidParameter, "tridiagonal lengths must be n, n-1, n-1 with n >= 1");
  DetSequence h;
  h.values.reserve(diag.size() + 1);
  h.values.push_back(Rational(1));
  h.values.push_back(diag[0]);
  for (std::size_t k = 1; k < diag.size(); ++k)
    h.values.push_back(diag[k] * h.values[k] - super[k - 1] * sub[k - 1] * h.values[k - 1]);
  return h;
}

SymmetricBlockDet det_blocktri_symmetric(const BlockTriSpec& spec) {
  spec.validate();
  std::vector<Rational> diag, super, sub;
  Rational factor = 1;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto& b = spec.blocks[i];
    if (b.b != b.c || b.a != b.d)
      throw Error(ErrorKind::NotSymmetricBlocks, "block " + std::to_string(i + 1) + " is not of the form [[a,b],[b,a]]");
    diag.push_back(b.a + b.b);
    factor *= b.a - b.b;
  }
  for (const auto& c : spec.couplings) {
    super.push_back(2 * c.p);
    sub.push_back(2 * c.q);
  }
  SymmetricBlockDet out;
  out.htilde = det_tridiag_recurrence(diag, super, sub);
  out.factor = factor;
  out.g = out.htilde.back() * factor;
  return out;
}

YangYuFactorization factor_yangyu(const RationalMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0)
    throw Error(ErrorKind::NotYangYuForm, "matrix is not square of even order");
  const Eigen::Index k = m.rows() / 2;
  const RationalMatrix a = m.topLeftCorner(k, k);
  const RationalMatrix b = m.topRightCorner(k, k);
  if (m.bottomRightCorner(k, k) != a || m.bottomLeftCorner(k, k) != b)
    throw Error(ErrorKind::NotYangYuForm, "blocks are not arranged as [[A, B], [B, A]]");

  const RationalMatrix sum = a + b;
  const RationalMatrix diff = a - b;
  YangYuFactorization out;
  out.det = determinant_exact(sum) * determinant_exact(diff);

  // psi_{dM}(d x) = d^n psi_M(x), so the identity is unchanged by scaling.
  const Rational scale(common_denominator(m));
  out.psi_sum = charpoly_exact(RationalMatrix(sum * scale));
  out.psi_difference = charpoly_exact(RationalMatrix(diff * scale));
  out.psi_product_check = charpoly_exact(RationalMatrix(m * scale)) == out.psi_sum * out.psi_difference;
  return out;
}

RationalMatrix split_pair_order(const RationalMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw Error(ErrorKind::ShapeMismatch, "pair reordering needs a square matrix of even order");
  const Eigen::Index n = m.rows() / 2;
  Eigen::PermutationMatrix<Eigen::Dynamic> perm(m.rows());
  // Interleaved index 2i -> i, 2i+1 -> n+i.
  for (Eigen::Index i = 0; i < n; ++i) {
    perm.indices()(2 * i) = static_cast<int>(i);
    perm.indices()(2 * i + 1) = static_cast<int>(n + i);
  }
  return perm * m * perm.transpose();
}

std::ostream& operator<<(std::ostream& os, const BlockTriSpec& spec) {
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const auto& b = spec.blocks[i];
    os << "block " << to_string(b.a) << ' ' << to_string(b.b) << ' ' << to_string(b.c) << ' ' << to_string(b.d)
       << '\n';
    if (i < spec.couplings.size())
      os << "couple " << to_string(spec.couplings[i].p) << ' ' << to_string(spec.couplings[i].q) << '\n';
  }
  return os;
}

BlockTriSpec read_blocktri_spec(std::istream& in) {
  BlockTriSpec spec;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string directive;
    if (!(tokens >> directive) || directive.front() == '#') continue;
    std::vector<std::string> args;
    for (std::string t; tokens >> t;) args.push_back(t);
    auto fail = [&](const std::string& msg) {
      return Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + msg);
    };
    auto number = [&](const std::string& text) {
      try {
        return parse_rational(text);
      } catch (const Error& e) {
        throw fail(e.what());
      }
    };
    if (directive == "block") {
      if (args.size() != 4) throw fail("expected 'block a b c d'");
      spec.blocks.push_back({number(args[0]), number(args[1]), number(args[2]), number(args[3])});
    } else if (directive == "couple") {
      if (args.size() != 2) throw fail("expected 'couple p q'");
      spec.couplings.push_back({number(args[0]), number(args[1])});
    } else {
      throw fail("unknown directive '" + directive + "'");
    }
  }
  spec.validate();
  return spec;
}

}  // namespace kirchhoff
