#pragma once

#include "kirchhoff/scalar.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

namespace kirchhoff {

struct Edge {
  std::size_t u;
  std::size_t v;
  Rational resistance;  // ohms, strictly positive

  Rational conductance() const { return 1 / resistance; }
};

/// Undirected multigraph whose edges are resistors. Parallel edges are kept
/// individually; self-loops are rejected. Immutable once built.
class Multigraph {
 public:
  Multigraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  /// Throws Error{UnknownLabel}.
  std::size_t index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

using EdgeTriple = std::tuple<std::string, std::string, Rational>;

Multigraph build_multigraph(const std::vector<std::string>& labels,
                            const std::vector<EdgeTriple>& edges);

/// Vertex-by-edge incidence matrix; column j carries +1 at the lower endpoint
/// index and -1 at the higher one.
Eigen::MatrixXi incidence(const Multigraph& g);

/// Diagonal of R^-1, one conductance per edge in edge order.
RationalVector conductances(const Multigraph& g);

/// Component id per vertex (breadth-first, ids assigned in vertex order).
std::vector<std::size_t> connected_components(const Multigraph& g);

bool is_connected(const Multigraph& g);

// Edge-list text format:
//   # comment
//   vertices a b c
//   edge a b 1/2
Multigraph read_edge_list(std::istream& in);
Multigraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Multigraph& g);

}  // namespace kirchhoff
