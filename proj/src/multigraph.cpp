#include "kirchhoff/multigraph.hpp"

#include "kirchhoff/error.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace kirchhoff {

Multigraph::Multigraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  if (labels_.empty()) throw Error(ErrorKind::InvalidParameter, "a multigraph needs at least one vertex");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(ErrorKind::Parse, "empty vertex label");
    if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' repeated");
  }
  for (const auto& e : edges_) {
    if (e.u >= labels_.size() || e.v >= labels_.size())
      throw Error(ErrorKind::UnknownLabel, "edge endpoint index out of range");
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, "self-loop at '" + labels_[e.u] + "'");
    if (e.resistance <= 0)
      throw Error(ErrorKind::NonPositiveResistance,
                  "resistance " + to_string(e.resistance) + " on edge " + labels_[e.u] + "-" + labels_[e.v]);
  }
}

std::size_t Multigraph::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::UnknownLabel, "no vertex '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

Multigraph build_multigraph(const std::vector<std::string>& labels, const std::vector<EdgeTriple>& edges) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], i).second)
      throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' repeated");
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [a, b, r] : edges) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end()) throw Error(ErrorKind::UnknownLabel, "no vertex '" + a + "'");
    if (ib == index.end()) throw Error(ErrorKind::UnknownLabel, "no vertex '" + b + "'");
    out.push_back({ia->second, ib->second, r});
  }
  return Multigraph(labels, std::move(out));
}

Eigen::MatrixXi incidence(const Multigraph& g) {
  Eigen::MatrixXi q = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(g.vertex_count()),
                                            static_cast<Eigen::Index>(g.edge_count()));
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const auto& e = g.edges()[j];
    const auto lo = static_cast<Eigen::Index>(std::min(e.u, e.v));
    const auto hi = static_cast<Eigen::Index>(std::max(e.u, e.v));
    q(lo, static_cast<Eigen::Index>(j)) = 1;
    q(hi, static_cast<Eigen::Index>(j)) = -1;
  }
  return q;
}

RationalVector conductances(const Multigraph& g) {
  RationalVector c(static_cast<Eigen::Index>(g.edge_count()));
  for (std::size_t j = 0; j < g.edge_count(); ++j) c(static_cast<Eigen::Index>(j)) = g.edges()[j].conductance();
  return c;
}

std::vector<std::size_t> connected_components(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != unset) continue;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    comp[s] = next;
    while (!frontier.empty()) {
      const auto x = frontier.front();
      frontier.pop();
      for (auto y : adj[x])
        if (comp[y] == unset) {
          comp[y] = next;
          frontier.push(y);
        }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Multigraph& g) {
  const auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

Multigraph read_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<EdgeTriple> edges;
  bool have_vertices = false;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string directive;
    if (!(tokens >> directive) || directive.front() == '#') continue;
    if (directive == "vertices") {
      if (have_vertices) throw fail("second 'vertices' line");
      have_vertices = true;
      for (std::string l; tokens >> l;) labels.push_back(l);
      if (labels.empty()) throw fail("'vertices' lists no labels");
    } else if (directive == "edge") {
      if (!have_vertices) throw fail("'edge' before 'vertices'");
      std::string a, b, r, extra;
      if (!(tokens >> a >> b >> r)) throw fail("expected 'edge <u> <v> <resistance>'");
      if (tokens >> extra) throw fail("trailing token '" + extra + "'");
      try {
        edges.emplace_back(a, b, parse_rational(r));
      } catch (const Error& e) {
        throw fail(e.what());
      }
    } else {
      throw fail("unknown directive '" + directive + "'");
    }
  }
  if (!have_vertices) throw Error(ErrorKind::Parse, "missing 'vertices' line");
  return build_multigraph(labels, edges);
}

Multigraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
  out << "vertices";
  for (const auto& l : g.labels()) out << ' ' << l;
  out << '\n';
  for (const auto& e : g.edges())
    out << "edge " << g.label(e.u) << ' ' << g.label(e.v) << ' ' << to_string(e.resistance) << '\n';
}

}  // namespace kirchhoff
