#include "kwise/realize_measure.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "lower_recursion.hpp"

namespace kwise {
namespace {

void validate_sizes(std::span<const Rational> sizes, int k) {
  const int n = static_cast<int>(sizes.size());
  if (n < 2) throw Error(ErrorKind::invalid_input, "need at least two sets");
  if (k < 2 || k > n)
    throw Error(ErrorKind::invalid_input,
                "k must satisfy 2 <= k <= n (k=" + std::to_string(k) +
                    ", n=" + std::to_string(n) + ")");
  for (const auto& a : sizes)
    if (sgn(a) < 0)
      throw Error(ErrorKind::invalid_input, "negative size " + a.get_str());
}

}  // namespace

WeightSystem realize_lower(std::span<const Rational> sizes, int k) {
  validate_sizes(sizes, k);
  return detail::lower_witness(sizes, k, /*integral=*/false);
}

WeightSystem realize_upper(std::span<const Rational> sizes) {
  WeightSystem w(static_cast<int>(sizes.size()));
  for (int i = 0; i < static_cast<int>(sizes.size()); ++i) {
    if (sgn(sizes[i]) < 0)
      throw Error(ErrorKind::invalid_input,
                  "negative size " + sizes[i].get_str());
    w.add(SubsetKey{i + 1}, sizes[i]);
  }
  return w;
}

WeightSystem interpolate(const WeightSystem& lo, const WeightSystem& hi,
                         const Rational& a) {
  if (lo.n() != hi.n())
    throw Error(ErrorKind::invalid_pair, "witnesses differ in dimension");
  const DerivedSizes dlo = derived_sizes(lo);
  const DerivedSizes dhi = derived_sizes(hi);
  if (dlo.per_set != dhi.per_set)
    throw Error(ErrorKind::invalid_pair, "witnesses differ in row sums");
  if (a < dlo.union_size || a > dhi.union_size)
    throw Error(ErrorKind::out_of_range,
                "target " + a.get_str() + " outside [" +
                    dlo.union_size.get_str() + ", " +
                    dhi.union_size.get_str() + "]");

  const Rational span = dhi.union_size - dlo.union_size;
  const Rational t = sgn(span) == 0 ? Rational(1) : (dhi.union_size - a) / span;
  WeightSystem out(lo.n());
  for (const auto& [key, w] : lo.weights()) out.add(key, t * w);
  for (const auto& [key, w] : hi.weights()) out.add(key, (1 - t) * w);
  return out;
}

WeightSystem leak(const WeightSystem& w, const WeightSystem::Map& drains,
                  int k) {
  if (k < 3)
    throw Error(ErrorKind::unsupported, "leaking needs k >= 3");
  WeightSystem out = w;
  for (const auto& [key, x] : drains) {
    if (key.size() != k - 1)
      throw Error(ErrorKind::invalid_input,
                  "drain key must have cardinality k-1 = " +
                      std::to_string(k - 1));
    if (sgn(x) < 0)
      throw Error(ErrorKind::invalid_input, "negative drain " + x.get_str());
    if (sgn(x) == 0) continue;
    if (x > w.weight(key))
      throw Error(ErrorKind::overdraw,
                  "drain " + x.get_str() + " exceeds available weight " +
                      w.weight(key).get_str());
    out.add(key, -x);
    const Rational share = x / (k - 2);
    const auto& idx = key.indices();
    for (std::size_t skip = 0; skip < idx.size(); ++skip) {
      std::vector<int> face;
      for (std::size_t j = 0; j < idx.size(); ++j)
        if (j != skip) face.push_back(idx[j]);
      out.add(SubsetKey(std::move(face)), share);
    }
  }
  return out;
}

WeightSystem realize_addendum(std::span<const Rational> sizes, int k,
                              const Rational& a) {
  validate_sizes(sizes, k);
  if (k < 3)
    throw Error(ErrorKind::precondition, "the two-layer witness needs k >= 3");
  Rational sigma = 0, max_size = 0;
  for (const auto& s : sizes) {
    sigma += s;
    max_size = std::max(max_size, s);
  }
  const Rational low = sigma / (k - 1);
  const Rational high = sigma / (k - 2);
  if (!(max_size <= low && low <= a && a <= high))
    throw Error(ErrorKind::precondition,
                "need max a_i <= sigma/(k-1) <= a <= sigma/(k-2)");

  const WeightSystem base = realize_lower(sizes, k);
  Rational remaining = Rational(k - 2) * (a - low);
  WeightSystem::Map drains;
  for (const auto& [key, w] : base.weights()) {
    if (sgn(remaining) == 0) break;
    const Rational x = std::min(remaining, w);
    drains.emplace(key, x);
    remaining -= x;
  }
  if (sgn(remaining) != 0)
    throw std::logic_error("lower witness too light to drain");
  return leak(base, drains, k);
}

WeightSystem realize_measure(const Instance& inst, const Rational& a) {
  if (inst.mode() != Mode::measure)
    throw Error(ErrorKind::mode_mismatch, "instance is not in measure mode");
  if (!feasible(inst, a)) throw InfeasibleError(bounds(inst), a);
  return interpolate(realize_lower(inst.sizes(), inst.k()),
                     realize_upper(inst.sizes()), a);
}

}  // namespace kwise
