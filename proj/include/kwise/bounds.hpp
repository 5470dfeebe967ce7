#pragma once

#include "kwise/model.hpp"

namespace kwise {

/// The exact feasible interval [lower, upper] for the union size.
struct FeasibilityReport {
  Rational lower;
  Rational upper;
  Rational sigma;  // sum of sizes
  Rational a_bar;  // sigma / (k - 1)
  // Smallest m >= 2 with max size > sigma / m; n + 1 when no such m <= n
  // exists, and 2 when sigma == 0.
  int critical_index = 2;
};

FeasibilityReport bounds(const Instance& inst);

/// Whether some admissible set system has union size a. Throws
/// Error(invalid_input) for negative a, or non-integer a in counting mode.
bool feasible(const Instance& inst, const Rational& a);

/// Thrown by the realizers when the requested union size is outside the
/// feasible interval.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const FeasibilityReport& report, const Rational& a);

  const FeasibilityReport& report() const { return report_; }
  const Rational& requested() const { return requested_; }

 private:
  FeasibilityReport report_;
  Rational requested_;
};

}  // namespace kwise
