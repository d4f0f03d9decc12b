#include "kirchhoff/error.hpp"
#include "kirchhoff/families.hpp"
#include "kirchhoff/resistance.hpp"
#include "kirchhoff/spectral.hpp"
#include "kirchhoff/sweep.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace kirchhoff;

namespace {

bool blank(const SweepRow& row, const std::string& column) {
  const auto it = row.columns.find(column);
  return it == row.columns.end() || std::holds_alternative<std::monostate>(it->second);
}

}  // namespace

TEST_CASE("family names round trip") {
  for (Family f : {Family::NestedWeighted, Family::NestedUnit, Family::FourRegular, Family::PathWeighted,
                   Family::PathUnit, Family::Cycle, Family::Complete}) {
    const auto parsed = parse_family(family_name(f));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == f);
  }
  CHECK_FALSE(parse_family("petersen").has_value());
}

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_AS(generate({Family::FourRegular, 2}), Error);
  CHECK_THROWS_AS(generate({Family::Cycle, 2}), Error);
  CHECK_THROWS_AS(generate({Family::NestedWeighted, 0}), Error);
  CHECK_NOTHROW(generate({Family::PathUnit, 1}));
}

TEST_CASE("nested family shapes") {
  const auto g1 = generate({Family::NestedWeighted, 1});
  CHECK(g1.vertex_count() == 2);
  CHECK(g1.edge_count() == 2);
  CHECK(g1.labels() == std::vector<std::string>{"v1", "v1p"});
  const auto g3 = generate({Family::NestedWeighted, 3});
  CHECK(g3.vertex_count() == 6);
  CHECK(g3.edge_count() == 4 * 2 + 2);
  for (const auto& e : g3.edges()) CHECK(e.resistance > 0);
}

TEST_CASE("four-regular family") {
  const auto octahedron = generate({Family::FourRegular, 3});
  CHECK(octahedron.vertex_count() == 6);
  CHECK(octahedron.edge_count() == 12);
  for (long m = 3; m <= 12; ++m) {
    const auto g = generate({Family::FourRegular, m});
    CHECK(g.vertex_count() == static_cast<std::size_t>(2 * m));
    CHECK(g.edge_count() == static_cast<std::size_t>(4 * m));
    const auto l = laplacian(g);
    for (Eigen::Index i = 0; i < l.rows(); ++i) CHECK(l(i, i) == 4);
  }
}

TEST_CASE("psi recurrence matches printed polynomials and the direct route") {
  const auto psi = psi_recurrence(8);
  REQUIRE(psi.size() == 8);
  CHECK(psi[0] == Polynomial{0, -4, 1});
  CHECK(psi[1] == Polynomial{0, -384, 176, -24, 1});
  CHECK(psi[2] == Polynomial{0, -110592, 69120, -15360, 1488, -64, 1});
  CHECK(psi[3] == Polynomial{0, -113246208, 85524480, -24023040, 3192320, -220416, 8016, -144, 1});
  for (long n = 1; n <= 8; ++n)
    CHECK(psi[static_cast<std::size_t>(n - 1)] == charpoly_exact(oracle::nested_display_laplacian(n)));
}

TEST_CASE("psi carries the linear factors") {
  const auto psi = psi_recurrence(8);
  for (long n = 2; n <= 8; ++n) {
    Polynomial rest = psi[static_cast<std::size_t>(n - 1)];
    std::vector<long> roots{4};
    for (long i = 2; i <= n; ++i) roots.push_back(3L << i);
    for (long r : roots) {
      const auto [q, rem] = rest.divmod_monic(Polynomial::linear_root(r));
      CHECK(rem.is_zero());
      rest = q;
    }
  }
}

TEST_CASE("nested closed forms") {
  CHECK(kf_nested_closed(1) == Rational(1, 2));
  CHECK(kf_nested_closed(3) == Rational(15, 4));
  CHECK(kf_nested_closed(4) == Rational(145, 24));
  CHECK(kf_nested_unit_closed(1) == Rational(1, 2));
  CHECK(kf_nested_unit_closed(2) == Rational(11, 3));
  CHECK(kf_nested_unit_closed(5) == Rational(205, 6));
  CHECK(kirchhoff_poly(generate({Family::NestedUnit, 5})) == Rational(205, 6));
  for (long n = 1; n <= 6; ++n)
    CHECK(kf_nested_closed(n) == oracle::kirchhoff_by_elimination(generate({Family::NestedWeighted, n})));
}

TEST_CASE("four-regular closed form") {
  CHECK(kf_fourregular_closed(3) == Rational(13, 2));
  // K_{4,4}: spectrum {0, 4 (x6), 8}, so Kf = 8 * (6/4 + 1/8).
  CHECK(kf_fourregular_closed(4) == 13);
  CHECK(kf_fourregular_closed(6) == Rational(71, 2));
  for (long m = 3; m <= 7; ++m)
    CHECK(kf_fourregular_closed(m) == oracle::kirchhoff_by_elimination(generate({Family::FourRegular, m})));
  for (long m = 3; m <= 12; ++m) CHECK(kf_fourregular_closed(m) == kf_fourregular_closed_by_order(2 * m));
  // Octahedron spectrum {0, 4, 4, 4, 6, 6}.
  CHECK(kf_fourregular_closed(3) == 6 * (Rational(3, 4) + Rational(2, 6)));
}

TEST_CASE("baseline closed forms") {
  CHECK(kf_baseline_closed(Family::PathUnit, 3) == 4);
  CHECK(kf_baseline_closed(Family::PathWeighted, 2) == 1);
  CHECK(kf_baseline_closed(Family::PathWeighted, 4) == Rational(23, 4));
  CHECK(kf_baseline_closed(Family::Cycle, 4) == 5);
  CHECK(kf_baseline_closed(Family::Complete, 5) == 4);
  CHECK_THROWS_AS(kf_baseline_closed(Family::NestedWeighted, 3), Error);
  for (long n = 2; n <= 9; ++n)
    CHECK(kf_baseline_closed(Family::PathWeighted, n) ==
          oracle::kirchhoff_by_elimination(generate({Family::PathWeighted, n})));
}

TEST_CASE("asymptote gap") {
  CHECK(asymptote_gap(1) == Rational(11, 3));
  CHECK(asymptote_gap(2) == Rational(13, 6));
  CHECK(asymptote_gap(30) == Rational(69) / (3 * oracle::pow2(29)));
  CHECK(asymptote_line(1) == Rational(-19, 6));
  for (long n = 1; n < 30; ++n) CHECK(asymptote_gap(n + 1) < asymptote_gap(n));
}

TEST_CASE("series partial sums") {
  CHECK(series_partial_sums(SeriesKind::KOver2K, 2) == 1);
  CHECK(series_partial_sums(SeriesKind::KSquaredOver2K, 2) == 1);
  CHECK(series_partial_sums(SeriesKind::KOver2K, 1) == 0);
  Rational linear = 0, square = 0;
  for (long k = 1; k < 10; ++k) {
    linear += Rational(k) / oracle::pow2(k - 1);
    square += Rational(k * k) / oracle::pow2(k - 1);
  }
  CHECK(series_partial_sums(SeriesKind::KOver2K, 10) == linear);
  CHECK(series_partial_sums(SeriesKind::KSquaredOver2K, 10) == square);
}

TEST_CASE("fig4 sweep") {
  const auto rows = sweep_fig4(30);
  REQUIRE(rows.size() == 30);
  CHECK(std::get<Rational>(rows[0].columns.at("kf_closed")) == Rational(1, 2));
  CHECK(std::get<Rational>(rows[0].columns.at("y_asym")) == Rational(-19, 6));
  CHECK(std::get<Rational>(rows[0].columns.at("gap")) == Rational(11, 3));
  CHECK(std::holds_alternative<double>(rows[23].columns.at("kf_numeric")));
  CHECK(blank(rows[24], "kf_numeric"));
  std::ostringstream csv;
  write_fig4_csv(csv, rows);
  std::istringstream lines(csv.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "n,kf_closed,kf_closed_float,kf_numeric,abs_err,y_asym,y_asym_float,gap,gap_float");
  CHECK(first.rfind("1,1/2,0.5,", 0) == 0);
  CHECK(csv.str().find("30,") != std::string::npos);
  CHECK(csv.str().find("23/536870912") != std::string::npos);  // gap(30) = 69/(3*2^29), reduced
}

TEST_CASE("fig7 sweep") {
  const auto rows = sweep_fig7(12);
  REQUIRE(rows.size() == 11);
  const auto& six = rows[4];
  CHECK(six.x == 6);
  CHECK(std::get<Rational>(six.columns.at("kf_path")) == 35);
  CHECK(std::get<Rational>(six.columns.at("kf_cycle")) == Rational(35, 2));
  CHECK(std::get<Rational>(six.columns.at("kf_fourreg")) == Rational(13, 2));
  CHECK(blank(rows[5], "kf_fourreg"));
  std::ostringstream csv;
  write_fig7_csv(csv, rows);
  CHECK(csv.str().rfind("vertices,kf_path,kf_path_float,", 0) == 0);
  CHECK_THROWS_AS(sweep_fig7(5), Error);
}
