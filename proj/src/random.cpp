#include "kirchhoff/random.hpp"

#include "kirchhoff/determinant.hpp"
#include "kirchhoff/families.hpp"

#include <map>

namespace kirchhoff {

RationalMatrix random_int_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, long lo, long hi) {
  RationalMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(lo, hi));
  return m;
}

RationalVector random_int_vector(Rng& rng, Eigen::Index size, long lo, long hi) {
  RationalVector v(size);
  for (Eigen::Index i = 0; i < size; ++i) v(i) = Rational(rng.uniform(lo, hi));
  return v;
}

RationalMatrix random_nonsingular_matrix(Rng& rng, Eigen::Index order, long lo, long hi) {
  for (;;) {
    RationalMatrix m = random_int_matrix(rng, order, order, lo, hi);
    if (determinant_exact(m) != 0) return m;
  }
}

BlockTriSpec random_blocktri_spec(Rng& rng, std::size_t n, const BlockTriOptions& options) {
  BlockTriSpec spec;
  for (std::size_t i = 0; i < n; ++i) {
    Block2 b;
    do {
      b.a = rng.uniform(options.lo, options.hi);
      b.b = rng.uniform(options.lo, options.hi);
      if (options.symmetric_blocks) {
        b.c = b.b;
        b.d = b.a;
      } else {
        b.c = rng.uniform(options.lo, options.hi);
        b.d = rng.uniform(options.lo, options.hi);
      }
    } while (options.nonsingular_blocks && b.det() == 0);
    spec.blocks.push_back(b);
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    spec.couplings.push_back({Rational(rng.uniform(options.lo, options.hi)), Rational(rng.uniform(options.lo, options.hi))});
  return spec;
}

Multigraph random_connected_multigraph(Rng& rng, std::size_t order, int max_parallel) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<Edge> edges;
  std::map<std::pair<std::size_t, std::size_t>, int> multiplicity;
  auto resistance = [&] { return pow2(rng.uniform(-2, 2)); };
  auto add = [&](std::size_t u, std::size_t v) {
    auto& count = multiplicity[{std::min(u, v), std::max(u, v)}];
    if (count >= max_parallel) return;
    ++count;
    edges.push_back({u, v, resistance()});
  };
  for (std::size_t v = 1; v < order; ++v) add(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(v) - 1)), v);
  if (order >= 2) {
    const long extra = rng.uniform(0, static_cast<long>(2 * order));
    for (long k = 0; k < extra; ++k) {
      const auto u = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(order) - 1));
      const auto v = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(order) - 1));
      if (u != v) add(u, v);
    }
  }
  return Multigraph(std::move(labels), std::move(edges));
}

}  // namespace kirchhoff
