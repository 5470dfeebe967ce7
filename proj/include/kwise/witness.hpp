#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kwise/model.hpp"

namespace kwise {

struct VerifyReport {
  bool dimension_ok = false;  // witness n matches the instance
  bool k_admissible = false;
  bool integral_ok = false;   // always true in measure mode
  std::vector<bool> row_sum_ok;
  bool union_ok = false;
  Rational union_size;
  Rational lower_bound_slack;  // union - sigma / (k - 1)
  bool verdict = false;
};

/// Checks a witness against an instance and target union. Never throws on a
/// bad witness; every failure shows up in the report.
VerifyReport verify(const WeightSystem& w, const Instance& inst,
                    const Rational& a);

using ElementId = std::int64_t;

struct Block {
  SubsetKey key;
  Rational start;
  Rational length;
};

struct MaterializedWitness {
  Mode mode = Mode::counting;
  // counting: sets[i] lists the element ids of A_{i+1}; universe maps each
  // element to the key of the sets holding it.
  std::vector<std::vector<ElementId>> sets;
  std::vector<std::pair<ElementId, SubsetKey>> universe;
  // measure: disjoint intervals laid end to end from 0.
  std::vector<Block> blocks;
};

/// Lays a weight system out as explicit sets (counting; consecutive ids from
/// 1 in key order) or interval blocks (measure). Counting mode throws
/// Error(mode_mismatch) on a non-integer weight.
MaterializedWitness materialize(const WeightSystem& w, Mode mode);

/// Pure-intersection decomposition of explicit finite sets: the weight of S is
/// the number of elements lying in exactly the sets indexed by S.
WeightSystem decompose(const std::vector<std::vector<ElementId>>& sets);

}  // namespace kwise
