#include "kirchhoff/error.hpp"
#include "kirchhoff/families.hpp"
#include "kirchhoff/multigraph.hpp"
#include "kirchhoff/random.hpp"
#include "kirchhoff/spectral.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

using namespace kirchhoff;

namespace {

Multigraph figure1() {
  return build_multigraph({"v1", "v2", "v3"}, {{"v1", "v2", 1}, {"v2", "v3", 1}, {"v2", "v3", 1}});
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("build_multigraph keeps parallel edges in input order") {
  const auto g = figure1();
  CHECK(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edges()[1].u == 1);
  CHECK(g.edges()[2].v == 2);

  const auto single = build_multigraph({"a"}, {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);
}

TEST_CASE("build_multigraph rejects malformed input") {
  CHECK(kind_of([] { build_multigraph({"a", "b"}, {{"a", "a", 1}}); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([] { build_multigraph({"a", "a"}, {}); }) == ErrorKind::DuplicateLabel);
  CHECK(kind_of([] { build_multigraph({"a", "b"}, {{"a", "c", 1}}); }) == ErrorKind::UnknownLabel);
  CHECK(kind_of([] { build_multigraph({"a", "b"}, {{"a", "b", 0}}); }) == ErrorKind::NonPositiveResistance);
  CHECK(kind_of([] { build_multigraph({"a", "b"}, {{"a", "b", -1}}); }) == ErrorKind::NonPositiveResistance);
}

TEST_CASE("incidence orients each column from lower to higher index") {
  const Eigen::MatrixXi q = incidence(figure1());
  Eigen::MatrixXi expected(3, 3);
  expected << 1, 0, 0, -1, 1, 1, 0, -1, -1;
  CHECK(q == expected);

  const auto edge = build_multigraph({"a", "b"}, {{"b", "a", 3}});
  Eigen::MatrixXi one(2, 1);
  one << 1, -1;
  CHECK(incidence(edge) == one);
}

TEST_CASE("incidence columns sum to zero and rank is n - components") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_connected_multigraph(rng, static_cast<std::size_t>(rng.uniform(2, 10)));
    const Eigen::MatrixXi q = incidence(g);
    CHECK(q.colwise().sum().isZero());
    Eigen::FullPivLU<Eigen::MatrixXd> lu(q.cast<double>());
    lu.setThreshold(1e-9);
    CHECK(lu.rank() == static_cast<Eigen::Index>(g.vertex_count()) - 1);
  }
}

TEST_CASE("Laplacian is independent of edge order and incidence route") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_connected_multigraph(rng, static_cast<std::size_t>(rng.uniform(2, 9)));
    auto edges = g.edges();
    std::reverse(edges.begin(), edges.end());
    std::rotate(edges.begin(), edges.begin() + static_cast<long>(edges.size() / 2), edges.end());
    const Multigraph shuffled(g.labels(), edges);
    CHECK(laplacian(g) == laplacian(shuffled));
    CHECK(laplacian_from_incidence(g) == laplacian(g));
  }
}

TEST_CASE("merging parallel edges into their parallel equivalent leaves L unchanged") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_connected_multigraph(rng, static_cast<std::size_t>(rng.uniform(2, 9)));
    std::map<std::pair<std::size_t, std::size_t>, Rational> conductance;
    for (const auto& e : g.edges()) conductance[{std::min(e.u, e.v), std::max(e.u, e.v)}] += 1 / e.resistance;
    std::vector<Edge> merged;
    for (const auto& [key, c] : conductance) merged.push_back({key.first, key.second, 1 / c});
    CHECK(laplacian(Multigraph(g.labels(), merged)) == laplacian(g));
  }
}

TEST_CASE("is_connected") {
  CHECK(is_connected(figure1()));
  CHECK_FALSE(is_connected(build_multigraph({"a", "b"}, {})));
  CHECK(is_connected(build_multigraph({"a"}, {})));
  const auto g3 = generate({Family::NestedWeighted, 3});
  // Traversal oracle: union of edges reaches every vertex from v1.
  std::vector<bool> reached(g3.vertex_count(), false);
  reached[0] = true;
  for (std::size_t pass = 0; pass < g3.vertex_count(); ++pass)
    for (const auto& e : g3.edges())
      if (reached[e.u] || reached[e.v]) reached[e.u] = reached[e.v] = true;
  CHECK(std::all_of(reached.begin(), reached.end(), [](bool b) { return b; }));
  CHECK(is_connected(g3));
  const auto split = build_multigraph({"a", "b", "c", "d"}, {{"a", "b", 1}, {"c", "d", 1}});
  CHECK_FALSE(is_connected(split));
  CHECK(connected_components(split) == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("edge-list text format") {
  std::istringstream in(
      "# figure one\n"
      "vertices v1 v2   v3\n"
      "\n"
      "  edge v1 v2 1\n"
      "edge\tv2 v3 1/2\n"
      "edge v2 v3 0.25\n");
  const auto g = read_edge_list(in);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges()[1].resistance == Rational(1, 2));
  CHECK(g.edges()[2].resistance == Rational(1, 4));

  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  const auto h = read_edge_list(back);
  CHECK(h.labels() == g.labels());
  CHECK(laplacian(h) == laplacian(g));

  auto parse_kind = [](const std::string& text) {
    return kind_of([&] {
      std::istringstream s(text);
      read_edge_list(s);
    });
  };
  CHECK(parse_kind("vertices a b\nwire a b 1\n") == ErrorKind::Parse);
  CHECK(parse_kind("edge a b 1\n") == ErrorKind::Parse);
  CHECK(parse_kind("vertices a b\nedge a b\n") == ErrorKind::Parse);
  CHECK(parse_kind("vertices a b\nedge a b 1/0\n") == ErrorKind::Parse);
  CHECK(parse_kind("vertices a b\nedge a b x\n") == ErrorKind::Parse);
  CHECK(parse_kind("vertices a b\nedge a z 1\n") == ErrorKind::UnknownLabel);
  CHECK(parse_kind("vertices a b\nedge a b -2\n") == ErrorKind::NonPositiveResistance);
  CHECK(parse_kind("") == ErrorKind::Parse);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("2.") == Rational(2));
  CHECK(to_string(Rational(-19, 6)) == "-19/6");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1e3"), Error);
  CHECK_THROWS_AS(parse_rational("."), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
}
