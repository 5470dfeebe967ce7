#pragma once

#include <span>

#include "kwise/bounds.hpp"
#include "kwise/model.hpp"

namespace kwise {

/// Closed-form witness for k = n when max a_i <= a_bar = sigma / (n - 1):
/// weight a_bar - a_i on the key that omits only index i. Throws
/// Error(infeasible_for_extreme) when the condition fails.
WeightSystem solve_extreme(std::span<const Rational> sizes);

/// Witness realizing the smallest union max(max a_i, sigma / (k - 1)).
///
/// Built by the recursive construction: sort ascending, then either stack the
/// largest set over the union of the others (when it dominates a_bar), shave
/// the k - 1 smallest sets by b = a_bar - a_n onto a shared block, or peel
/// the smallest set off entirely; k = n bottoms out in solve_extreme.
/// Every level checks its own output exactly.
WeightSystem realize_lower(std::span<const Rational> sizes, int k);

/// Pairwise disjoint witness; union = sum of sizes.
WeightSystem realize_upper(std::span<const Rational> sizes);

/// Convex blend t * lo + (1 - t) * hi whose union is exactly a. Throws
/// Error(invalid_pair) if the row sums differ and Error(out_of_range) if a is
/// not between the two unions.
WeightSystem interpolate(const WeightSystem& lo, const WeightSystem& hi,
                         const Rational& a);

/// Moves amount x from each listed cardinality-(k-1) key to its k - 1
/// subsets of cardinality k - 2, at x / (k - 2) each. Row sums stay put and
/// the union grows by (sum of x) / (k - 2).
WeightSystem leak(const WeightSystem& w, const WeightSystem::Map& drains,
                  int k);

/// Witness for sigma/(k-1) <= a <= sigma/(k-2) (with sigma/(k-1) >= max a_i)
/// supported only on keys of cardinality k - 1 and k - 2.
WeightSystem realize_addendum(std::span<const Rational> sizes, int k,
                              const Rational& a);

/// Any feasible union size in measure mode.
WeightSystem realize_measure(const Instance& inst, const Rational& a);

}  // namespace kwise
