#include "kirchhoff/determinant.hpp"
#include "kirchhoff/error.hpp"
#include "kirchhoff/families.hpp"
#include "kirchhoff/random.hpp"
#include "kirchhoff/spectral.hpp"

#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <doctest.h>

#include <cmath>

using namespace kirchhoff;

namespace {

RationalMatrix rational(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("laplacian of the three-resistor circuit and of G2") {
  const auto fig1 = build_multigraph({"v1", "v2", "v3"}, {{"v1", "v2", 1}, {"v2", "v3", 1}, {"v2", "v3", 1}});
  CHECK(laplacian(fig1) == rational({{1, -1, 0}, {-1, 3, -2}, {0, -2, 2}}));
  CHECK(laplacian(generate({Family::NestedWeighted, 2})) ==
        rational({{4, 0, -2, -2}, {0, 4, -2, -2}, {-2, -2, 8, -4}, {-2, -2, -4, 8}}));
  CHECK(laplacian(generate({Family::NestedWeighted, 1})) == rational({{2, -2}, {-2, 2}}));
  CHECK(laplacian(build_multigraph({"a"}, {})) == rational({{0}}));
}

TEST_CASE("nested generator matches the block display and the growth steps") {
  for (long n = 1; n <= 8; ++n) {
    const auto l = laplacian(generate({Family::NestedWeighted, n}));
    CHECK(l == oracle::nested_display_laplacian(n));
    CHECK(l == laplacian(oracle::nested_by_growth_steps(n)));
  }
}

TEST_CASE("Laplacian rows sum to zero and the matrix is symmetric") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto l = laplacian(random_connected_multigraph(rng, static_cast<std::size_t>(rng.uniform(1, 9))));
    CHECK(l == l.transpose());
    for (Eigen::Index i = 0; i < l.rows(); ++i) CHECK(l.row(i).sum() == 0);
  }
}

TEST_CASE("charpoly_exact on small matrices") {
  CHECK(charpoly_exact(rational({{2, -2}, {-2, 2}})) == Polynomial{0, -4, 1});
  CHECK(charpoly_exact(laplacian(generate({Family::NestedWeighted, 2}))) == Polynomial{0, -384, 176, -24, 1});
  CHECK(charpoly_exact(rational({{0}})) == Polynomial{0, 1});
  CHECK(charpoly_exact(laplacian(generate({Family::Cycle, 3}))) == Polynomial{0, 9, -6, 1});
  RationalMatrix half(1, 1);
  half(0, 0) = Rational(1, 2);
  CHECK_THROWS_AS(charpoly_exact(half), Error);
}

TEST_CASE("Faddeev-LeVerrier agrees with determinant interpolation and Leibniz") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<Eigen::Index>(rng.uniform(1, 6));
    const RationalMatrix m = random_int_matrix(rng, n, n, -9, 9);
    const Polynomial p = charpoly_exact(m);
    CHECK(p == charpoly_interpolated(to_integer_matrix(m)));
    CHECK(p.degree() == static_cast<std::size_t>(n));
    CHECK(p.leading() == 1);
    // psi(x) = det(x I - m) at a few integer points, by permutation expansion.
    for (long x : {-3L, 0L, 2L, 7L}) {
      const RationalMatrix shifted = Rational(x) * RationalMatrix::Identity(n, n) - m;
      CHECK(p(Rational(x)) == oracle::leibniz_det(shifted));
    }
  }
}

TEST_CASE("Jacobi eigenvalues") {
  Eigen::MatrixXd two(2, 2);
  two << 2, -2, -2, 2;
  const auto s = eigenvalues(two);
  CHECK(s[0] == doctest::Approx(0.0));
  CHECK(s[1] == doctest::Approx(4.0));

  const auto c3 = eigenvalues(to_float(laplacian(generate({Family::Cycle, 3}))));
  CHECK(std::abs(c3[0]) < 1e-12);
  CHECK(c3[1] == doctest::Approx(3.0));
  CHECK(c3[2] == doctest::Approx(3.0));

  // Newton identities from the exact characteristic polynomial of L(G2).
  const auto g2 = eigenvalues(to_float(laplacian(generate({Family::NestedWeighted, 2}))));
  double sum = 0, product = 1;
  for (std::size_t i = 0; i < g2.size(); ++i) {
    sum += g2[i];
    if (i > 0) product *= g2[i];
  }
  CHECK(sum == doctest::Approx(24.0));
  CHECK(product == doctest::Approx(384.0));
}

TEST_CASE("Jacobi agrees with Eigen's self-adjoint solver") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<Eigen::Index>(rng.uniform(1, 12));
    const Eigen::MatrixXd a = to_float(random_int_matrix(rng, n, n, -9, 9));
    const Eigen::MatrixXd m = a + a.transpose();
    const auto mine = eigenvalues(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> reference(m, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < n; ++i)
      CHECK(mine[static_cast<std::size_t>(i)] == doctest::Approx(reference.eigenvalues()(i)).epsilon(1e-10).scale(m.norm()));
  }
}

TEST_CASE("Jacobi reports a sweep budget it cannot meet") {
  Eigen::MatrixXd m(3, 3);
  m << 1, 2, 3, 2, 4, 5, 3, 5, 6;
  CHECK_THROWS_AS(eigenvalues(m, {1e-13, 0}), Error);
}

TEST_CASE("pseudoinverse of a Laplacian") {
  Eigen::MatrixXd edge(2, 2);
  edge << 1, -1, -1, 1;
  CHECK(pseudoinverse_laplacian(edge).isApprox(edge / 4));

  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXd l = to_float(laplacian(random_connected_multigraph(rng, static_cast<std::size_t>(rng.uniform(2, 9)))));
    const Eigen::MatrixXd p = pseudoinverse_laplacian(l);
    // The four Penrose conditions.
    CHECK((l * p * l).isApprox(l, 1e-9));
    CHECK((p * l * p).isApprox(p, 1e-9));
    CHECK((l * p).isApprox((l * p).transpose(), 1e-9));
    CHECK((p * l).isApprox((p * l).transpose(), 1e-9));
  }

  Eigen::MatrixXd split = Eigen::MatrixXd::Zero(4, 4);
  split.topLeftCorner(2, 2) = edge;
  split.bottomRightCorner(2, 2) = edge;
  CHECK_THROWS_AS(pseudoinverse_laplacian(split), Error);
}

TEST_CASE("floating determinant") {
  CHECK(determinant_float(Eigen::MatrixXd::Identity(4, 4)) == 1.0);
  CHECK(determinant_float(Eigen::Vector3d(1, 2, 3).asDiagonal().toDenseMatrix()) == doctest::Approx(6.0));
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalMatrix m = random_int_matrix(rng, 6, 6, -9, 9);
    const double exact = to_double(determinant_exact(m));
    CHECK(determinant_float(to_float(m)) == doctest::Approx(exact).epsilon(1e-9));
  }
  Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(3, 3);
  CHECK(determinant_float(ones) == 0.0);
}

TEST_CASE("exact determinants") {
  CHECK(determinant_exact(rational({{3, 1}, {1, 3}})) == 8);
  CHECK(determinant_exact(rational({{4, -2, -2}, {-2, 8, -4}, {-2, -4, 8}})) == 96);
  const auto g2 = laplacian(generate({Family::NestedWeighted, 2}));
  CHECK(determinant_exact(delete_rows_cols(g2, {0}, {0})) == 384 / 4);
  CHECK(determinant_exact(g2) == 0);
  CHECK(determinant_exact(RationalMatrix(0, 0)) == 1);

  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<Eigen::Index>(rng.uniform(1, 6));
    const RationalMatrix m = random_int_matrix(rng, n, n, -3, 3);
    const Rational leibniz = oracle::leibniz_det(m);
    CHECK(determinant_exact(m) == leibniz);
    CHECK(determinant_laplace(m) == leibniz);
    CHECK(m * adjugate(m) == leibniz * RationalMatrix::Identity(n, n));
  }
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial p{-4, 0, 1};  // x^2 - 4
  const auto [q, r] = p.divmod_monic(Polynomial::linear_root(2));
  CHECK(q == Polynomial{2, 1});
  CHECK(r.is_zero());
  CHECK(p(BigInt(3)) == 5);
  CHECK((p - p).is_zero());
  CHECK(p * Polynomial{1, 1} == Polynomial{-4, -4, 1, 1});
  CHECK(p.to_ascending_string() == "-4 0 1");
  CHECK(Polynomial{5, 0, 0}.degree() == 0);
}
