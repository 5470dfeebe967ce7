#include "kwise/realize_counting.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "kwise/bounds.hpp"
#include "kwise/realize_measure.hpp"
#include "lower_recursion.hpp"

namespace kwise {

WeightSystem realize_lower_counting(std::span<const Rational> sizes, int k) {
  const int n = static_cast<int>(sizes.size());
  if (n < 2) throw Error(ErrorKind::invalid_input, "need at least two sets");
  if (k < 2 || k > n)
    throw Error(ErrorKind::invalid_input,
                "k must satisfy 2 <= k <= n (k=" + std::to_string(k) +
                    ", n=" + std::to_string(n) + ")");
  for (const auto& a : sizes)
    if (sgn(a) < 0 || !is_integer(a))
      throw Error(ErrorKind::invalid_input,
                  "counting sizes must be non-negative integers, got " +
                      a.get_str());
  return detail::lower_witness(sizes, k, /*integral=*/true);
}

namespace {

// Lexicographically first key of maximum cardinality.
const SubsetKey& split_target(const WeightSystem& w) {
  const SubsetKey* chosen = nullptr;
  for (const auto& [key, weight] : w.weights())
    if (!chosen || key.size() > chosen->size()) chosen = &key;
  if (!chosen || chosen->size() < 2)
    throw Error(ErrorKind::cannot_increment,
                "every region is a singleton; union already maximal");
  const Rational& weight = w.weights().at(*chosen);
  if (!is_integer(weight))
    throw Error(ErrorKind::mode_mismatch,
                "increment needs integer weights, got " + weight.get_str());
  return *chosen;
}

// Moves units from key {i_1..i_l} to {i_1} and {i_2..i_l}.
void split(WeightSystem& w, const SubsetKey& key, const Rational& units) {
  const auto& idx = key.indices();
  const SubsetKey head{idx.front()};
  const SubsetKey tail(std::vector<int>(idx.begin() + 1, idx.end()));
  w.add(key, -units);
  w.add(head, units);
  w.add(tail, units);
}

}  // namespace

WeightSystem increment(const WeightSystem& w) {
  WeightSystem out = w;
  split(out, split_target(w), Rational(1));
  return out;
}

WeightSystem realize_counting(const Instance& inst, const Rational& a) {
  if (inst.mode() != Mode::counting)
    throw Error(ErrorKind::mode_mismatch, "instance is not in counting mode");
  if (!feasible(inst, a)) throw InfeasibleError(bounds(inst), a);
  WeightSystem w = realize_lower_counting(inst.sizes(), inst.k());
  // Same result as repeated increment(): the chosen key stays first until it
  // is used up, so its units are split in one go.
  Rational steps = a - derived_sizes(w).union_size;
  while (sgn(steps) > 0) {
    const SubsetKey key = split_target(w);
    const Rational units = std::min(steps, w.weight(key));
    split(w, key, units);
    steps -= units;
  }
  return w;
}

WeightSystem realize(const Instance& inst, const Rational& a) {
  return inst.mode() == Mode::counting ? realize_counting(inst, a)
                                       : realize_measure(inst, a);
}

}  // namespace kwise
