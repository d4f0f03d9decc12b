#include "kirchhoff/resistance.hpp"

#include "kirchhoff/determinant.hpp"
#include "kirchhoff/error.hpp"
#include "kirchhoff/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace kirchhoff {

namespace {

void require_connected(const Multigraph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph has more than one component");
}

std::pair<Eigen::Index, Eigen::Index> pair_indices(const Multigraph& g, const std::string& u, const std::string& v) {
  const auto i = static_cast<Eigen::Index>(g.index_of(u));
  const auto j = static_cast<Eigen::Index>(g.index_of(v));
  if (i == j) throw Error(ErrorKind::SameVertex, "resistance from '" + u + "' to itself");
  return {i, j};
}

Eigen::MatrixXd pinv_of(const Multigraph& g) {
  try {
    return pseudoinverse_laplacian(to_float(laplacian(g)));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularShift) throw Error(ErrorKind::Disconnected, e.what());
    throw;
  }
}

}  // namespace

double resistance_pinv(const Multigraph& g, const std::string& u, const std::string& v) {
  const auto [i, j] = pair_indices(g, u, v);
  require_connected(g);
  const Eigen::MatrixXd p = pinv_of(g);
  return p(i, i) + p(j, j) - 2.0 * p(i, j);
}

Rational resistance_det(const Multigraph& g, const std::string& u, const std::string& v) {
  const auto [i, j] = pair_indices(g, u, v);
  require_connected(g);
  const RationalMatrix l = laplacian(g);
  const Rational den = determinant_exact(delete_rows_cols(l, {i}, {i}));
  if (den == 0) throw Error(ErrorKind::Disconnected, "det L(i|i) vanishes");
  return determinant_exact(delete_rows_cols(l, {i, j}, {i, j})) / den;
}

Eigen::MatrixXd resistance_matrix(const Multigraph& g) {
  require_connected(g);
  const Eigen::MatrixXd p = pinv_of(g);
  const Eigen::Index n = p.rows();
  Eigen::MatrixXd r(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) r(i, j) = i == j ? 0.0 : p(i, i) + p(j, j) - 2.0 * p(i, j);
  return r;
}

double kirchhoff_eigen(const Multigraph& g) {
  require_connected(g);
  const Spectrum s = eigenvalues(to_float(laplacian(g)));
  const std::size_t n = s.size();
  if (n < 2) return 0.0;
  if (s[1] < 1e-9) throw Error(ErrorKind::Disconnected, "second-smallest Laplacian eigenvalue is zero");
  double sum = 0.0;
  for (std::size_t i = 1; i < n; ++i) sum += 1.0 / s[i];
  return static_cast<double>(n) * sum;
}

Rational kirchhoff_poly(const Multigraph& g) {
  require_connected(g);
  const RationalMatrix l = laplacian(g);
  const BigInt d = common_denominator(l);
  const Polynomial psi = charpoly_exact(RationalMatrix(l * Rational(d)));
  const BigInt a1 = abs(psi.coeff(1));
  const BigInt a2 = abs(psi.coeff(2));
  if (a1 == 0) throw Error(ErrorKind::Disconnected, "linear charpoly coefficient vanishes");
  return Rational(static_cast<long>(g.vertex_count())) * Rational(a2, a1) * Rational(d);
}

double kirchhoff_pairs_pinv(const Multigraph& g) {
  require_connected(g);
  const Eigen::MatrixXd p = pinv_of(g);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = i + 1; j < p.rows(); ++j) sum += p(i, i) + p(j, j) - 2.0 * p(i, j);
  return sum;
}

Rational kirchhoff_pairs_det(const Multigraph& g) {
  require_connected(g);
  Rational sum = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < g.vertex_count(); ++j) sum += resistance_det(g, g.label(i), g.label(j));
  return sum;
}

Rational kirchhoff_tree(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (g.edge_count() + 1 != n || !is_connected(g))
    throw Error(ErrorKind::NotATree, "graph is not a tree");
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbour, edge id)
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    adj[g.edges()[k].u].emplace_back(g.edges()[k].v, k);
    adj[g.edges()[k].v].emplace_back(g.edges()[k].u, k);
  }
  Rational total = 0;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    // Size of the side containing u once edge k is cut.
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> frontier;
    frontier.push(g.edges()[k].u);
    seen[g.edges()[k].u] = true;
    std::size_t side = 0;
    while (!frontier.empty()) {
      const auto x = frontier.front();
      frontier.pop();
      ++side;
      for (const auto& [y, id] : adj[x])
        if (id != k && !seen[y]) {
          seen[y] = true;
          frontier.push(y);
        }
    }
    total += g.edges()[k].resistance * Rational(static_cast<long>(side * (n - side)));
  }
  return total;
}

KirchhoffReport kirchhoff_report(const Multigraph& g) {
  KirchhoffReport r;
  r.order = g.vertex_count();
  r.kf_eigen = kirchhoff_eigen(g);
  r.kf_poly = kirchhoff_poly(g);
  r.kf_pairs = kirchhoff_pairs_pinv(g);
  const double poly = to_double(r.kf_poly);
  r.method_spread = std::max({std::abs(r.kf_eigen - poly), std::abs(r.kf_pairs - poly), std::abs(r.kf_eigen - r.kf_pairs)});
  return r;
}

}  // namespace kirchhoff
