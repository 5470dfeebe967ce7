#pragma once

#include <span>

#include "kwise/model.hpp"

namespace kwise {

/// Integer witness for the smallest union max(max a_i, ceil(sigma/(k-1))).
WeightSystem realize_lower_counting(std::span<const Rational> sizes, int k);

/// Splits one unit off the lexicographically first key of largest
/// cardinality into {i_1} and the rest, raising the union by exactly one.
/// Throws Error(cannot_increment) when every key is a singleton.
WeightSystem increment(const WeightSystem& w);

/// Any feasible integer union size in counting mode.
WeightSystem realize_counting(const Instance& inst, const Rational& a);

/// Dispatches to realize_counting or realize_measure by inst.mode().
WeightSystem realize(const Instance& inst, const Rational& a);

}  // namespace kwise
