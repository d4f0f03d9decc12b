#include "kirchhoff/sweep.hpp"

#include "kirchhoff/error.hpp"
#include "kirchhoff/families.hpp"
#include "kirchhoff/resistance.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace kirchhoff {

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

struct Column {
  std::string name;
  bool exact;
};

const SweepCell& cell(const SweepRow& row, const std::string& name) {
  static const SweepCell empty;
  const auto it = row.columns.find(name);
  return it == row.columns.end() ? empty : it->second;
}

void emit(std::ostream& os, const SweepCell& c, bool exact) {
  if (const auto* r = std::get_if<Rational>(&c)) {
    os << ',' << to_string(*r);
    if (exact) os << ',' << format_float(to_double(*r));
  } else if (const auto* d = std::get_if<double>(&c)) {
    os << ',' << format_float(*d);
    if (exact) os << ',';
  } else {
    os << ',';
    if (exact) os << ',';
  }
}

void write_header(std::ostream& os, const std::string& x, const std::vector<Column>& cols) {
  os << x;
  for (const auto& c : cols) {
    os << ',' << c.name;
    if (c.exact) os << ',' << c.name << "_float";
  }
  os << '\n';
}

}  // namespace

std::vector<SweepRow> sweep_fig4(long max_n) {
  if (max_n < 1) throw Error(ErrorKind::InvalidParameter, "fig4 sweep needs max_n >= 1");
  std::vector<SweepRow> rows;
  for (long n = 1; n <= max_n; ++n) {
    SweepRow row;
    row.x = n;
    row.columns["kf_closed"] = kf_nested_closed(n);
    if (2 * n <= kSweepEigenCutoff) row.columns["kf_numeric"] = kirchhoff_eigen(generate({Family::NestedWeighted, n}));
    row.columns["y_asym"] = asymptote_line(n);
    row.columns["gap"] = asymptote_gap(n);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> sweep_fig7(long max_vertices) {
  if (max_vertices < 6) throw Error(ErrorKind::InvalidParameter, "fig7 sweep needs max_n >= 6");
  std::vector<SweepRow> rows;
  for (long v = 2; v <= max_vertices; ++v) {
    SweepRow row;
    row.x = v;
    row.columns["kf_path"] = kf_baseline_closed(Family::PathUnit, v);
    if (v >= 3) row.columns["kf_cycle"] = kf_baseline_closed(Family::Cycle, v);
    if (v % 2 == 0) {
      row.columns["kf_nested_unit"] = kf_nested_unit_closed(v / 2);
      row.columns["kf_nested_weighted"] = kf_nested_closed(v / 2);
      if (v >= 6) row.columns["kf_fourreg"] = kf_fourregular_closed(v / 2);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_fig4_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "n,kf_closed,kf_closed_float,kf_numeric,abs_err,y_asym,y_asym_float,gap,gap_float\n";
  for (const auto& row : rows) {
    os << row.x;
    const auto& closed = cell(row, "kf_closed");
    const auto& numeric = cell(row, "kf_numeric");
    emit(os, closed, true);
    emit(os, numeric, false);
    const auto* c = std::get_if<Rational>(&closed);
    const auto* n = std::get_if<double>(&numeric);
    emit(os, (c && n) ? SweepCell(std::abs(to_double(*c) - *n)) : SweepCell(), false);
    emit(os, cell(row, "y_asym"), true);
    emit(os, cell(row, "gap"), true);
    os << '\n';
  }
}

void write_fig7_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  const std::vector<Column> cols{{"kf_path", true},
                                 {"kf_cycle", true},
                                 {"kf_nested_unit", true},
                                 {"kf_fourreg", true},
                                 {"kf_nested_weighted", true}};
  write_header(os, "vertices", cols);
  for (const auto& row : rows) {
    os << row.x;
    for (const auto& c : cols) emit(os, cell(row, c.name), c.exact);
    os << '\n';
  }
}

}  // namespace kirchhoff
