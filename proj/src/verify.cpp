#include "kirchhoff/verify.hpp"

#include "kirchhoff/blocktridiag.hpp"
#include "kirchhoff/determinant.hpp"
#include "kirchhoff/families.hpp"
#include "kirchhoff/random.hpp"
#include "kirchhoff/resistance.hpp"
#include "kirchhoff/spectral.hpp"

#include <cmath>
#include <ostream>

namespace kirchhoff {

void PropertyCheck::check(bool ok, const std::function<std::string()>& detail) {
  ++result_.cases;
  if (!ok) {
    if (result_.failures == 0) result_.first_failure = detail();
    ++result_.failures;
  }
}

namespace {

std::string mat_str(const RationalMatrix& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += i ? "; " : "";
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += (j ? " " : "") + to_string(m(i, j));
  }
  return s + "]";
}

RationalMatrix assemble(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                        const RationalMatrix& d) {
  RationalMatrix m(a.rows() + c.rows(), a.cols() + b.cols());
  m << a, b, c, d;
  return m;
}

RationalMatrix tridiagonal(const std::vector<Rational>& diag, const std::vector<Rational>& super,
                           const std::vector<Rational>& sub) {
  const auto n = static_cast<Eigen::Index>(diag.size());
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = diag[static_cast<std::size_t>(i)];
    if (i + 1 < n) {
      m(i, i + 1) = super[static_cast<std::size_t>(i)];
      m(i + 1, i) = sub[static_cast<std::size_t>(i)];
    }
  }
  return m;
}

Rational direct_series(SeriesKind kind, long n) {
  Rational s = 0;
  for (long k = 1; k <= n - 1; ++k) s += Rational(kind == SeriesKind::KOver2K ? k : k * k) / pow2(k - 1);
  return s;
}

bool rel_close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

}  // namespace

std::vector<PropertyResult> verify_lemmas(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyResult> out;

  PropertyCheck schur("schur complement determinant vs Bareiss");
  for (int trial = 0; trial < 100; ++trial) {
    const long k1 = rng.uniform(1, 4), k2 = rng.uniform(1, 3);
    const RationalMatrix a = random_nonsingular_matrix(rng, k1, -9, 9);
    const RationalMatrix b = random_int_matrix(rng, k1, k2, -9, 9);
    const RationalMatrix c = random_int_matrix(rng, k2, k1, -9, 9);
    const RationalMatrix d = random_int_matrix(rng, k2, k2, -9, 9);
    const RationalMatrix m = assemble(a, b, c, d);
    schur.check(det_schur(a, b, c, d) == determinant_exact(m), [&] { return mat_str(m); });
  }
  out.push_back(schur.result());

  PropertyCheck bordered("bordered determinant via adjugate vs Bareiss");
  for (int trial = 0; trial < 100; ++trial) {
    const long k = rng.uniform(1, 5);
    const RationalMatrix a = random_int_matrix(rng, k, k, -9, 9);
    const RationalVector x = random_int_vector(rng, k, -9, 9);
    const RationalVector y = random_int_vector(rng, k, -9, 9);
    const Rational d = rng.uniform(-9, 9);
    RationalMatrix m(k + 1, k + 1);
    m << a, x, y.transpose(), RationalMatrix::Constant(1, 1, d);
    bordered.check(det_bordered(a, x, y, d) == determinant_exact(m), [&] { return mat_str(m); });
  }
  out.push_back(bordered.result());

  PropertyCheck rank1("rank-one update determinant vs Bareiss");
  for (int trial = 0; trial < 100; ++trial) {
    const long k = rng.uniform(1, 5);
    const RationalMatrix a = random_int_matrix(rng, k, k, -9, 9);
    const RationalVector x = random_int_vector(rng, k, -5, 5);
    const RationalVector y = random_int_vector(rng, k, -5, 5);
    const RationalMatrix m = a + x * y.transpose();
    rank1.check(det_rank1_update(a, x, y) == determinant_exact(m), [&] { return mat_str(a); });
  }
  out.push_back(rank1.result());

  PropertyCheck ones("all-ones coupled block determinant vs Bareiss");
  for (int trial = 0; trial < 100; ++trial) {
    const long m1 = rng.uniform(1, 4), n1 = rng.uniform(1, 4);
    const RationalMatrix a = random_nonsingular_matrix(rng, m1, -9, 9);
    const RationalMatrix b = random_nonsingular_matrix(rng, n1, -9, 9);
    const Rational p = rng.uniform(-9, 9), q = rng.uniform(-9, 9);
    const RationalMatrix m = assemble(a, RationalMatrix::Constant(m1, n1, p), RationalMatrix::Constant(n1, m1, q), b);
    ones.check(det_ones_coupled(a, b, p, q) == determinant_exact(m), [&] { return mat_str(m); });
  }
  out.push_back(ones.result());

  PropertyCheck yy("[[A,B],[B,A]] determinant and charpoly factorization");
  for (int trial = 0; trial < 50; ++trial) {
    const long k = rng.uniform(1, 6);
    const RationalMatrix a = random_int_matrix(rng, k, k, -9, 9);
    const RationalMatrix b = random_int_matrix(rng, k, k, -9, 9);
    const RationalMatrix m = assemble(a, b, b, a);
    const auto f = factor_yangyu(m);
    yy.check(f.psi_product_check && f.det == determinant_exact(m), [&] { return mat_str(m); });
  }
  out.push_back(yy.result());
  return out;
}

std::vector<PropertyResult> verify_recurrences(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyResult> out;

  PropertyCheck blocktri("block tridiagonal recurrence vs Bareiss (nonsingular blocks)");
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = random_blocktri_spec(rng, static_cast<std::size_t>(rng.uniform(1, 6)));
    const auto g = det_blocktri_recurrence(spec);
    bool ok = true;
    for (std::size_t k = 1; k <= spec.size(); ++k) {
      BlockTriSpec prefix{{spec.blocks.begin(), spec.blocks.begin() + static_cast<long>(k)},
                          {spec.couplings.begin(), spec.couplings.begin() + static_cast<long>(k - 1)}};
      ok = ok && g.values[k - 1] == determinant_exact(expand_blocktri(prefix));
    }
    blocktri.check(ok, [&] { return mat_str(expand_blocktri(spec)); });
  }
  out.push_back(blocktri.result());

  PropertyCheck unrestricted("block tridiagonal recurrence vs Bareiss (singular blocks allowed)");
  for (int trial = 0; trial < 200; ++trial) {
    BlockTriOptions opts;
    opts.nonsingular_blocks = false;
    opts.lo = -2;
    opts.hi = 2;
    const auto spec = random_blocktri_spec(rng, static_cast<std::size_t>(rng.uniform(1, 6)), opts);
    unrestricted.check(det_blocktri_recurrence(spec).back() == determinant_exact(expand_blocktri(spec)),
                       [&] { return mat_str(expand_blocktri(spec)); });
  }
  out.push_back(unrestricted.result());

  PropertyCheck tri("tridiagonal recurrence vs Bareiss");
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
    std::vector<Rational> diag, super, sub;
    for (std::size_t i = 0; i < n; ++i) diag.emplace_back(rng.uniform(-9, 9));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      super.emplace_back(rng.uniform(-9, 9));
      sub.emplace_back(rng.uniform(-9, 9));
    }
    const RationalMatrix m = tridiagonal(diag, super, sub);
    tri.check(det_tridiag_recurrence(diag, super, sub).back() == determinant_exact(m), [&] { return mat_str(m); });
  }
  out.push_back(tri.result());

  PropertyCheck sym("symmetric-block factorization vs recurrence and Bareiss");
  for (int trial = 0; trial < 200; ++trial) {
    BlockTriOptions opts;
    opts.symmetric_blocks = true;
    const auto spec = random_blocktri_spec(rng, static_cast<std::size_t>(rng.uniform(1, 6)), opts);
    const auto s = det_blocktri_symmetric(spec);
    const Rational brute = determinant_exact(expand_blocktri(spec));
    sym.check(s.g == brute && s.g == det_blocktri_recurrence(spec).back(),
              [&] { return mat_str(expand_blocktri(spec)); });
  }
  out.push_back(sym.result());

  const auto psi = psi_recurrence(8);
  PropertyCheck nested("nested-graph charpoly recurrence vs direct charpoly (n=1..8)");
  for (long n = 1; n <= 8; ++n) {
    const Polynomial direct = charpoly_exact(laplacian(generate({Family::NestedWeighted, n})));
    nested.check(psi[static_cast<std::size_t>(n - 1)] == direct, [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(nested.result());

  PropertyCheck divides("charpoly divisible by (x-4) prod (x-3*2^i) (n=2..8)");
  for (long n = 2; n <= 8; ++n) {
    Polynomial d = Polynomial::linear_root(BigInt(4));
    for (long i = 2; i <= n; ++i) d = d * Polynomial::linear_root(3 * numerator(pow2(i)));
    divides.check(psi[static_cast<std::size_t>(n - 1)].divmod_monic(d).remainder.is_zero(),
                  [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(divides.result());

  PropertyCheck reordered("reordered nested Laplacian factorizes as [[A,B],[B,A]] (n=2..6)");
  for (long n = 2; n <= 6; ++n) {
    const RationalMatrix l = split_pair_order(laplacian(generate({Family::NestedWeighted, n})));
    const auto f = factor_yangyu(l);
    reordered.check(f.psi_product_check && f.psi_sum * f.psi_difference == psi[static_cast<std::size_t>(n - 1)],
                    [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(reordered.result());
  return out;
}

std::vector<PropertyResult> verify_closedforms(std::uint64_t seed) {
  std::vector<PropertyResult> out;

  PropertyCheck nested_exact("nested weighted Kf closed form == exact charpoly route (n=1..10)");
  for (long n = 1; n <= 10; ++n)
    nested_exact.check(kf_nested_closed(n) == kirchhoff_poly(generate({Family::NestedWeighted, n})),
                       [&] { return "n=" + std::to_string(n); });
  out.push_back(nested_exact.result());

  PropertyCheck nested_eig("nested weighted Kf closed form vs eigenvalue route, rel 1e-6 (n=1..12)");
  for (long n = 1; n <= 12; ++n) {
    const double closed = to_double(kf_nested_closed(n));
    const double eig = kirchhoff_eigen(generate({Family::NestedWeighted, n}));
    nested_eig.check(std::abs(eig - closed) <= 1e-6 * closed, [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(nested_eig.result());

  PropertyCheck unit("nested unit Kf closed form == exact charpoly route (n=1..12)");
  for (long n = 1; n <= 12; ++n)
    unit.check(kf_nested_unit_closed(n) == kirchhoff_poly(generate({Family::NestedUnit, n})),
               [&] { return "n=" + std::to_string(n); });
  out.push_back(unit.result());

  PropertyCheck four("4-regular Kf closed form == exact charpoly route (m=3..10)");
  for (long m = 3; m <= 10; ++m)
    four.check(kf_fourregular_closed(m) == kirchhoff_poly(generate({Family::FourRegular, m})) &&
                   kf_fourregular_closed(m) == kf_fourregular_closed_by_order(2 * m),
               [&] { return "m=" + std::to_string(m); });
  out.push_back(four.result());

  PropertyCheck base_eig("path/cycle/complete closed forms vs eigenvalue route, rel 1e-8 (n=3..15)");
  PropertyCheck base_poly("path/cycle/complete closed forms == exact charpoly route (n=3..10)");
  for (Family f : {Family::PathUnit, Family::Cycle, Family::Complete}) {
    for (long n = 3; n <= 15; ++n) {
      const auto g = generate({f, n});
      const Rational closed = kf_baseline_closed(f, n);
      base_eig.check(rel_close(kirchhoff_eigen(g), to_double(closed), 1e-8),
                     [&] { return std::string(family_name(f)) + " n=" + std::to_string(n); });
      if (n <= 10)
        base_poly.check(kirchhoff_poly(g) == closed,
                        [&] { return std::string(family_name(f)) + " n=" + std::to_string(n); });
    }
  }
  out.push_back(base_eig.result());
  out.push_back(base_poly.result());

  PropertyCheck wpath("weighted path Kf: closed form == tree sum == charpoly route (n=1..12)");
  for (long n = 1; n <= 12; ++n) {
    const auto g = generate({Family::PathWeighted, n});
    const Rational closed = kf_baseline_closed(Family::PathWeighted, n);
    wpath.check(kirchhoff_tree(g) == closed && kirchhoff_poly(g) == closed, [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(wpath.result());

  PropertyCheck series("series partial sums: closed forms == direct sums (n=1..40)");
  for (long n = 1; n <= 40; ++n)
    for (SeriesKind k : {SeriesKind::KOver2K, SeriesKind::KSquaredOver2K})
      series.check(series_partial_sums(k, n) == direct_series(k, n), [&] { return "n=" + std::to_string(n); });
  out.push_back(series.result());

  PropertyCheck gap("asymptote gap == (2n+9)/(3*2^(n-1)), positive, strictly decreasing (n=1..30)");
  for (long n = 1; n <= 30; ++n) {
    const Rational g = asymptote_gap(n);
    gap.check(g == Rational(2 * n + 9, 3) / pow2(n - 1) && g > 0 && (n == 30 || asymptote_gap(n + 1) < g),
              [&] { return "n=" + std::to_string(n); });
  }
  out.push_back(gap.result());

  Rng rng(seed);
  PropertyCheck consensus("method consensus on 50 random multigraphs, rel 1e-6");
  PropertyCheck triangle("resistance triangle inequality on random multigraphs, abs 1e-9");
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_connected_multigraph(rng, static_cast<std::size_t>(rng.uniform(2, 10)));
    const Rational poly = kirchhoff_poly(g);
    const double ref = to_double(poly);
    const double eig = kirchhoff_eigen(g);
    const double pinv = kirchhoff_pairs_pinv(g);
    const double det = to_double(kirchhoff_pairs_det(g));
    const double tol = 1e-6 * std::max(1.0, ref);
    const bool ok = std::abs(eig - ref) <= tol && std::abs(pinv - ref) <= tol && std::abs(det - ref) <= tol &&
                    std::abs(eig - pinv) <= tol && std::abs(eig - det) <= tol && std::abs(pinv - det) <= tol;
    consensus.check(ok, [&] { return "trial " + std::to_string(trial); });
    const Eigen::MatrixXd r = resistance_matrix(g);
    bool tri_ok = true;
    for (Eigen::Index u = 0; u < r.rows(); ++u)
      for (Eigen::Index v = 0; v < r.rows(); ++v)
        for (Eigen::Index w = 0; w < r.rows(); ++w) tri_ok = tri_ok && r(u, w) <= r(u, v) + r(v, w) + 1e-9;
    triangle.check(tri_ok, [&] { return "trial " + std::to_string(trial); });
  }
  out.push_back(consensus.result());
  out.push_back(triangle.result());
  return out;
}

bool print_report(std::ostream& os, const std::vector<PropertyResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    os << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  [" << (r.cases - r.failures) << "/" << r.cases
       << "]";
    if (!r.passed() && !r.first_failure.empty()) os << "  first failure: " << r.first_failure;
    os << '\n';
    all = all && r.passed();
  }
  return all;
}

}  // namespace kirchhoff
