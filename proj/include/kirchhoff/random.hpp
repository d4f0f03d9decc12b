#pragma once

#include "kirchhoff/blocktridiag.hpp"
#include "kirchhoff/multigraph.hpp"
#include "kirchhoff/scalar.hpp"

#include <cstdint>
#include <random>

namespace kirchhoff {

/// Seeded generator for reproducible randomized checks.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

RationalMatrix random_int_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, long lo, long hi);
RationalVector random_int_vector(Rng& rng, Eigen::Index size, long lo, long hi);

/// Resamples until the matrix is nonsingular.
RationalMatrix random_nonsingular_matrix(Rng& rng, Eigen::Index order, long lo, long hi);

struct BlockTriOptions {
  long lo = -9;
  long hi = 9;
  bool nonsingular_blocks = true;
  bool symmetric_blocks = false;  // blocks of the form [[a, b], [b, a]]
};

BlockTriSpec random_blocktri_spec(Rng& rng, std::size_t n, const BlockTriOptions& options = {});

/// Connected multigraph: a random spanning tree plus extra edges, at most
/// max_parallel resistors per vertex pair, resistances drawn from
/// {1/4, 1/2, 1, 2, 4}.
Multigraph random_connected_multigraph(Rng& rng, std::size_t order, int max_parallel = 3);

}  // namespace kirchhoff
