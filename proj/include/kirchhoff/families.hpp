#pragma once

#include "kirchhoff/multigraph.hpp"
#include "kirchhoff/polynomial.hpp"
#include "kirchhoff/scalar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kirchhoff {

enum class Family {
  NestedWeighted,  // G_n: 2n vertices, dyadic resistances halving inward
  NestedUnit,      // G_n topology, unit resistors
  FourRegular,     // Gamma_2m: m shells closed into a ring
  PathWeighted,    // edge k has resistance 2^-(k-1)
  PathUnit,
  Cycle,
  Complete,
};

struct FamilySpec {
  Family family;
  long parameter;  // n, or m for FourRegular (2m vertices)

  /// Throws InvalidParameter.
  void validate() const;
};

/// CLI names: nested, nested-unit, fourreg, path-weighted, path, cycle, complete.
std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Vertex labels are v<k> and v<k>p for the paired families, v<k> otherwise.
Multigraph generate(const FamilySpec& spec);

/// 2^e for any integer e.
Rational pow2(long e);

/// Working polynomials g_0 .. g_n with g_0 = 1, g_1 = x - 4 and
/// g_k = (x - 3*2^k) g_{k-1} - 2^(2k) g_{k-2}.
std::vector<Polynomial> nested_g_sequence(long n);

/// Characteristic polynomials of L(G_1) .. L(G_nmax), index 0 holding n = 1.
std::vector<Polynomial> psi_recurrence(long n_max);

Rational kf_nested_closed(long n);
Rational kf_nested_unit_closed(long n);
/// m >= 3 shells (2m vertices).
Rational kf_fourregular_closed(long m);
/// Same value written in terms of the vertex count (even, >= 6).
Rational kf_fourregular_closed_by_order(long vertices);
/// PathUnit, PathWeighted, Cycle, Complete only.
Rational kf_baseline_closed(Family family, long n);

/// 17n/6 - 6
Rational asymptote_line(long n);
/// kf_nested_closed(n) - asymptote_line(n)
Rational asymptote_gap(long n);

enum class SeriesKind { KOver2K, KSquaredOver2K };

/// Closed forms of sum_{k=1}^{n-1} k / 2^(k-1) and sum k^2 / 2^(k-1).
Rational series_partial_sums(SeriesKind kind, long n);

}  // namespace kirchhoff
