#include "kwise/bounds.hpp"

#include <algorithm>

namespace kwise {

FeasibilityReport bounds(const Instance& inst) {
  FeasibilityReport r;
  Rational max_size = 0;
  for (const auto& a : inst.sizes()) {
    r.sigma += a;
    max_size = std::max(max_size, a);
  }
  r.a_bar = r.sigma / (inst.k() - 1);
  r.upper = r.sigma;
  if (inst.mode() == Mode::counting)
    r.lower = std::max(max_size, Rational(ceil(r.a_bar)));
  else
    r.lower = std::max(max_size, r.a_bar);

  if (sgn(r.sigma) == 0) {
    r.critical_index = 2;
  } else {
    r.critical_index = inst.n() + 1;
    for (int m = 2; m <= inst.n(); ++m) {
      if (max_size * m > r.sigma) {
        r.critical_index = m;
        break;
      }
    }
  }
  return r;
}

bool feasible(const Instance& inst, const Rational& a) {
  if (sgn(a) < 0)
    throw Error(ErrorKind::invalid_input, "negative union size " + a.get_str());
  if (inst.mode() == Mode::counting && !is_integer(a))
    throw Error(ErrorKind::invalid_input,
                "counting mode needs an integer union size, got " + a.get_str());
  const FeasibilityReport r = bounds(inst);
  return r.lower <= a && a <= r.upper;
}

InfeasibleError::InfeasibleError(const FeasibilityReport& report,
                                 const Rational& a)
    : Error(ErrorKind::infeasible,
            "union size " + a.get_str() + " outside feasible range [" +
                report.lower.get_str() + ", " + report.upper.get_str() + "]"),
      report_(report),
      requested_(a) {}

}  // namespace kwise
