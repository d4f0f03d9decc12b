#include "kirchhoff/families.hpp"

#include "kirchhoff/error.hpp"

namespace kirchhoff {

namespace {

std::string shell(long k) { return "v" + std::to_string(k); }
std::string shell_prime(long k) { return "v" + std::to_string(k) + "p"; }

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorKind::InvalidParameter, msg);
}

Rational rat(long v) { return Rational(v); }

Multigraph nested(long n, bool weighted) {
  std::vector<std::string> labels;
  for (long k = 1; k <= n; ++k) {
    labels.push_back(shell(k));
    labels.push_back(shell_prime(k));
  }
  std::vector<Edge> edges;
  auto idx = [](long k, bool prime) { return static_cast<std::size_t>(2 * (k - 1) + (prime ? 1 : 0)); };
  for (long k = 1; k < n; ++k) {
    // Coupling -2^k J2 between shells k and k+1.
    const Rational r = weighted ? pow2(-k) : Rational(1);
    for (bool a : {false, true})
      for (bool b : {false, true}) edges.push_back({idx(k, a), idx(k + 1, b), r});
  }
  // Innermost pair: two parallel resistors of 2^(1-n).
  const Rational inner = weighted ? pow2(1 - n) : Rational(1);
  edges.push_back({idx(n, false), idx(n, true), inner});
  edges.push_back({idx(n, false), idx(n, true), inner});
  return Multigraph(std::move(labels), std::move(edges));
}

Multigraph four_regular(long m) {
  std::vector<std::string> labels;
  for (long k = 1; k <= m; ++k) {
    labels.push_back(shell(k));
    labels.push_back(shell_prime(k));
  }
  std::vector<Edge> edges;
  for (long k = 0; k < m; ++k) {
    const long next = (k + 1) % m;
    for (long a : {0L, 1L})
      for (long b : {0L, 1L})
        edges.push_back({static_cast<std::size_t>(2 * k + a), static_cast<std::size_t>(2 * next + b), Rational(1)});
  }
  return Multigraph(std::move(labels), std::move(edges));
}

std::vector<std::string> plain_labels(long n) {
  std::vector<std::string> labels;
  for (long k = 1; k <= n; ++k) labels.push_back(shell(k));
  return labels;
}

}  // namespace

void FamilySpec::validate() const {
  const long minimum = (family == Family::FourRegular || family == Family::Cycle) ? 3 : 1;
  require(parameter >= minimum, std::string(family_name(family)) + " requires parameter >= " + std::to_string(minimum) +
                                    ", got " + std::to_string(parameter));
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "nested") return Family::NestedWeighted;
  if (name == "nested-unit") return Family::NestedUnit;
  if (name == "fourreg") return Family::FourRegular;
  if (name == "path") return Family::PathUnit;
  if (name == "path-weighted") return Family::PathWeighted;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::NestedWeighted: return "nested";
    case Family::NestedUnit: return "nested-unit";
    case Family::FourRegular: return "fourreg";
    case Family::PathUnit: return "path";
    case Family::PathWeighted: return "path-weighted";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
  }
  return "?";
}

Multigraph generate(const FamilySpec& spec) {
  spec.validate();
  const long n = spec.parameter;
  switch (spec.family) {
    case Family::NestedWeighted: return nested(n, true);
    case Family::NestedUnit: return nested(n, false);
    case Family::FourRegular: return four_regular(n);
    case Family::PathWeighted:
    case Family::PathUnit: {
      std::vector<Edge> edges;
      for (long k = 1; k < n; ++k)
        edges.push_back({static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k),
                         spec.family == Family::PathWeighted ? pow2(1 - k) : Rational(1)});
      return Multigraph(plain_labels(n), std::move(edges));
    }
    case Family::Cycle: {
      std::vector<Edge> edges;
      for (long k = 0; k < n; ++k)
        edges.push_back({static_cast<std::size_t>(k), static_cast<std::size_t>((k + 1) % n), Rational(1)});
      return Multigraph(plain_labels(n), std::move(edges));
    }
    case Family::Complete: {
      std::vector<Edge> edges;
      for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), Rational(1)});
      return Multigraph(plain_labels(n), std::move(edges));
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unknown family");
}

Rational pow2(long e) {
  const BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

std::vector<Polynomial> nested_g_sequence(long n) {
  require(n >= 0, "g sequence index must be >= 0");
  std::vector<Polynomial> g{Polynomial{1}};
  if (n >= 1) g.push_back(Polynomial{-4, 1});
  for (long k = 2; k <= n; ++k) {
    const BigInt three_pow = 3 * numerator(pow2(k));
    const BigInt four_pow = numerator(pow2(2 * k));
    g.push_back(Polynomial::linear_root(three_pow) * g[static_cast<std::size_t>(k - 1)] -
                g[static_cast<std::size_t>(k - 2)] * four_pow);
  }
  return g;
}

std::vector<Polynomial> psi_recurrence(long n_max) {
  require(n_max >= 1, "psi recurrence needs n_max >= 1");
  const auto g = nested_g_sequence(n_max);
  std::vector<Polynomial> psi;
  psi.push_back(Polynomial{0, -4, 1});
  Polynomial diagonal_part = Polynomial{-4, 1};  // (x - 4) prod_{i=2}^{n} (x - 3*2^i)
  for (long n = 2; n <= n_max; ++n) {
    diagonal_part = diagonal_part * Polynomial::linear_root(3 * numerator(pow2(n)));
    const auto& g1 = g[static_cast<std::size_t>(n - 1)];
    const auto& g2 = g[static_cast<std::size_t>(n - 2)];
    const Polynomial path_part = Polynomial::linear_root(numerator(pow2(n))) * g1 - g2 * numerator(pow2(2 * n));
    psi.push_back(path_part * diagonal_part);
  }
  return psi;
}

Rational kf_nested_closed(long n) {
  require(n >= 1, "n >= 1 required");
  return Rational(17 * n, 6) - 6 + Rational(2 * n + 9, 3) / pow2(n - 1);
}

Rational kf_nested_unit_closed(long n) {
  require(n >= 1, "n >= 1 required");
  if (n == 1) return Rational(1, 2);
  return Rational(n * n * n + 3 * n * n + n, 6);
}

Rational kf_fourregular_closed(long m) {
  require(m >= 3, "Gamma_2m requires m >= 3");
  return Rational(m * m * m + 6 * m * m - m, 12);
}

Rational kf_fourregular_closed_by_order(long vertices) {
  require(vertices >= 6 && vertices % 2 == 0, "Gamma_n requires even n >= 6");
  const long n = vertices;
  return Rational(n * n * n + 12 * n * n - 4 * n, 96);
}

Rational kf_baseline_closed(Family family, long n) {
  switch (family) {
    case Family::PathUnit:
      require(n >= 1, "path requires n >= 1");
      return Rational(n * n * n - n, 6);
    case Family::PathWeighted:
      require(n >= 1, "weighted path requires n >= 1");
      return rat(4 * n - 12) + Rational(n + 3) / pow2(n - 2);
    case Family::Cycle:
      require(n >= 3, "cycle requires n >= 3");
      return Rational(n * n * n - n, 12);
    case Family::Complete:
      require(n >= 1, "complete graph requires n >= 1");
      return rat(n - 1);
    default:
      throw Error(ErrorKind::InvalidParameter, "no baseline formula for " + std::string(family_name(family)));
  }
}

Rational asymptote_line(long n) { return Rational(17 * n, 6) - 6; }

Rational asymptote_gap(long n) { return kf_nested_closed(n) - asymptote_line(n); }

Rational series_partial_sums(SeriesKind kind, long n) {
  require(n >= 1, "n >= 1 required");
  if (kind == SeriesKind::KOver2K) return 4 - Rational(n + 1) / pow2(n - 2);
  return 12 - Rational(n * n + 2 * n + 3) / pow2(n - 2);
}

}  // namespace kirchhoff
