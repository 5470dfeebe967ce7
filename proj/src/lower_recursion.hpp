#pragma once

#include <span>

#include "kwise/model.hpp"

namespace kwise::detail {

/// Witness of the smallest union for the given sizes and k. With integral
/// set, the target is ceil(sigma/(k-1)) and every intermediate weight must be
/// an integer. Sizes are validated by the public wrappers.
WeightSystem lower_witness(std::span<const Rational> sizes, int k,
                           bool integral);

/// max(max a_i, sigma/(k-1)), with the ceiling taken when integral.
Rational lower_union(std::span<const Rational> sizes, int k, bool integral);

}  // namespace kwise::detail
