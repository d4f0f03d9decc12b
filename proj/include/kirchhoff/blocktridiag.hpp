#pragma once

#include "kirchhoff/polynomial.hpp"
#include "kirchhoff/scalar.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace kirchhoff {

/// 2x2 diagonal block [[a, b], [c, d]].
struct Block2 {
  Rational a, b, c, d;

  Rational det() const { return a * d - b * c; }
  /// a + d - b - c, i.e. 1^T adj(A) 1.
  Rational t() const { return a + d - b - c; }
};

struct Coupling {
  Rational p;  // superdiagonal multiplier of J2
  Rational q;  // subdiagonal multiplier of J2
};

/// Block tridiagonal matrix with 2x2 diagonal blocks A_i and all-ones
/// couplings p_i J2 (above) / q_i J2 (below).
struct BlockTriSpec {
  std::vector<Block2> blocks;
  std::vector<Coupling> couplings;  // blocks.size() - 1 entries

  std::size_t size() const { return blocks.size(); }
  /// Throws InvalidParameter on an empty spec or mismatched coupling count.
  void validate() const;
};

/// Prefix sequence of determinants. For the tridiagonal recurrence values[0]
/// holds h_0 = 1; for block recurrences values[k-1] holds g_k.
struct DetSequence {
  std::vector<Rational> values;

  const Rational& back() const { return values.back(); }
  std::size_t size() const { return values.size(); }
};

RationalMatrix expand_blocktri(const BlockTriSpec& spec);

/// det [[A, B], [C, D]] = det A * det(D - C A^-1 B). Throws SingularA.
Rational det_schur(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                   const RationalMatrix& d);

/// det [[A, x], [y^T, d]] = d det A - y^T adj(A) x. Total in A.
Rational det_bordered(const RationalMatrix& a, const RationalVector& x, const RationalVector& y, const Rational& d);

/// det(A + x y^T) = det A + y^T adj(A) x.
Rational det_rank1_update(const RationalMatrix& a, const RationalVector& x, const RationalVector& y);

/// det [[A, p J], [q J, B]] = det A det B - p q sum(adj A) sum(adj B).
Rational det_ones_coupled(const RationalMatrix& a, const RationalMatrix& b, const Rational& p, const Rational& q);

/// g_k = det A_k g_{k-1} - p_{k-1} q_{k-1} t_k t_{k-1} g_{k-2}. Evaluated as
/// a polynomial identity; nonsingular blocks are not required.
DetSequence det_blocktri_recurrence(const BlockTriSpec& spec);

/// h_0 = 1, h_1 = a_1, h_k = a_k h_{k-1} - p_{k-1} q_{k-1} h_{k-2}.
DetSequence det_tridiag_recurrence(const std::vector<Rational>& diag, const std::vector<Rational>& super,
                                   const std::vector<Rational>& sub);

struct SymmetricBlockDet {
  Rational g;            // det of the expanded matrix
  DetSequence htilde;    // h~_0 .. h~_n
  Rational factor;       // prod (a_i - b_i)
};

/// Blocks of the form [[a, b], [b, a]]: g_n = h~_n * prod(a_i - b_i) with h~
/// the tridiagonal determinant of diag a_i + b_i and couplings 2p_i, 2q_i.
/// Throws NotSymmetricBlocks.
SymmetricBlockDet det_blocktri_symmetric(const BlockTriSpec& spec);

struct YangYuFactorization {
  Rational det;                // det(A + B) det(A - B)
  bool psi_product_check;      // psi_M == psi_{A+B} psi_{A-B}, exactly
  Polynomial psi_sum;          // psi_{A+B} of the integer-scaled matrix
  Polynomial psi_difference;   // psi_{A-B} of the integer-scaled matrix
};

/// M must be [[A, B], [B, A]] with equal square blocks. Rational entries are
/// scaled by their common denominator before the characteristic polynomials
/// are compared. Throws NotYangYuForm.
YangYuFactorization factor_yangyu(const RationalMatrix& m);

/// Permutes a 2n x 2n matrix from interleaved pair order (x1, x1', x2, x2',
/// ...) to split order (x1, x2, ..., x1', x2', ...).
RationalMatrix split_pair_order(const RationalMatrix& m);

std::ostream& operator<<(std::ostream& os, const BlockTriSpec& spec);

/// Reads `block a b c d` / `couple p q` lines ('#' comments allowed).
BlockTriSpec read_blocktri_spec(std::istream& in);

}  // namespace kirchhoff
