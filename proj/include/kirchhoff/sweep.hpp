#pragma once

#include "kirchhoff/scalar.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace kirchhoff {

/// Empty, exact, or floating-point CSV value.
using SweepCell = std::variant<std::monostate, Rational, double>;

struct SweepRow {
  long x = 0;
  std::map<std::string, SweepCell> columns;
};

/// Largest Laplacian order the fig4 sweep still eigensolves.
inline constexpr long kSweepEigenCutoff = 48;

/// Rows n = 1..max_n: kf_closed, kf_numeric (blank above the cutoff), y_asym, gap.
std::vector<SweepRow> sweep_fig4(long max_n);

/// Rows vertices = 2..max_vertices: kf_path, kf_cycle, kf_nested_unit,
/// kf_fourreg, kf_nested_weighted; blank where a family has no member.
std::vector<SweepRow> sweep_fig7(long max_vertices);

/// Exact columns are written as "p/q" followed by a <name>_float column.
/// abs_err = |kf_closed - kf_numeric| is derived while writing.
void write_fig4_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_fig7_csv(std::ostream& os, const std::vector<SweepRow>& rows);

std::string format_float(double v);

}  // namespace kirchhoff
