#include "kwise/witness.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kwise {

VerifyReport verify(const WeightSystem& w, const Instance& inst,
                    const Rational& a) {
  const int n = inst.n();
  const int k = inst.k();
  VerifyReport r;
  r.dimension_ok = w.n() == n;
  r.k_admissible = true;
  r.integral_ok = true;

  // Recomputed here from the raw map rather than through derived_sizes.
  std::vector<Rational> rows(n, Rational(0));
  for (const auto& [key, weight] : w.weights()) {
    if (key.size() >= k) r.k_admissible = false;
    if (inst.mode() == Mode::counting && weight.get_den() != 1)
      r.integral_ok = false;
    for (int i : key.indices()) {
      if (i > n)
        r.dimension_ok = false;
      else
        rows[i - 1] += weight;
    }
    r.union_size += weight;
  }

  r.row_sum_ok.resize(n);
  Rational sigma = 0;
  for (int i = 0; i < n; ++i) {
    r.row_sum_ok[i] = rows[i] == inst.sizes()[i];
    sigma += inst.sizes()[i];
  }
  r.union_ok = r.union_size == a;
  r.lower_bound_slack = r.union_size - sigma / (k - 1);
  r.verdict = r.dimension_ok && r.k_admissible && r.integral_ok &&
              r.union_ok &&
              std::all_of(r.row_sum_ok.begin(), r.row_sum_ok.end(),
                          [](bool ok) { return ok; });
  return r;
}

MaterializedWitness materialize(const WeightSystem& w, Mode mode) {
  MaterializedWitness m;
  m.mode = mode;
  if (mode == Mode::measure) {
    Rational cursor = 0;
    for (const auto& [key, weight] : w.weights()) {
      m.blocks.push_back(Block{key, cursor, weight});
      cursor += weight;
    }
    return m;
  }

  if (!w.is_integral())
    throw Error(ErrorKind::mode_mismatch,
                "counting materialization needs integer weights");
  m.sets.resize(w.n());
  ElementId next = 1;
  for (const auto& [key, weight] : w.weights()) {
    const ElementId count = weight.get_num().get_si();
    for (ElementId c = 0; c < count; ++c, ++next) {
      m.universe.emplace_back(next, key);
      for (int i : key.indices()) m.sets[i - 1].push_back(next);
    }
  }
  return m;
}

WeightSystem decompose(const std::vector<std::vector<ElementId>>& sets) {
  const int n = static_cast<int>(sets.size());
  // Membership fingerprint per element; std::set drops repeated ids.
  std::map<ElementId, std::set<int>> membership;
  for (int i = 0; i < n; ++i)
    for (ElementId e : sets[i]) membership[e].insert(i + 1);

  std::map<std::vector<int>, long> regions;
  for (const auto& [e, owners] : membership)
    ++regions[std::vector<int>(owners.begin(), owners.end())];

  WeightSystem w(n);
  for (const auto& [owners, count] : regions)
    w.add(SubsetKey(owners), Rational(count));
  return w;
}

}  // namespace kwise
