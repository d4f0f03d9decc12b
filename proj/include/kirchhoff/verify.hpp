#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace kirchhoff {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

/// Counts one case; records the first failing detail.
class PropertyCheck {
 public:
  explicit PropertyCheck(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& detail);
  PropertyResult result() const { return result_; }

 private:
  PropertyResult result_;
};

// Schur, bordered, rank-one and ones-coupled determinant identities plus the
// [[A,B],[B,A]] factorization, each against Bareiss on the assembled matrix.
std::vector<PropertyResult> verify_lemmas(std::uint64_t seed);

// Block tridiagonal, tridiagonal and symmetric-block recurrences against
// Bareiss; nested-graph characteristic polynomial recurrence against the
// direct exact characteristic polynomial.
std::vector<PropertyResult> verify_recurrences(std::uint64_t seed);

// Closed-form Kirchhoff indices against the exact and numeric pipelines,
// series identities, asymptote gap, and method consensus on random graphs.
std::vector<PropertyResult> verify_closedforms(std::uint64_t seed);

/// Prints one line per property; returns true iff all passed.
bool print_report(std::ostream& os, const std::vector<PropertyResult>& results);

}  // namespace kirchhoff
