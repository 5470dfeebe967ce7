#include "kwise/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <unordered_map>

#include "kwise/errors.hpp"
#include "kwise/witness.hpp"

namespace kwise::oracle {
namespace {

using Mask = std::uint32_t;

std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i + 1);
  return out;
}

// Depth-first search over key weights, memoized on (key position, remaining
// row budgets). The result for a state is the bitset of union totals that
// the remaining keys can contribute while exhausting every budget exactly.
class Enumerator {
 public:
  Enumerator(std::vector<std::int64_t> budgets, std::vector<Mask> keys,
             bool count)
      : n_(static_cast<int>(budgets.size())),
        keys_(std::move(keys)),
        cover_(keys_.size() + 1, 0),
        count_(count) {
    for (std::size_t j = keys_.size(); j-- > 0;)
      cover_[j] = cover_[j + 1] | keys_[j];
    start_ = std::move(budgets);
  }

  Enumeration run() {
    std::vector<std::int64_t> budgets = start_;
    const State s = search(0, budgets);
    Enumeration out;
    for (std::int64_t u = 0; u < 64; ++u)
      if (s.unions >> u & 1u) out.unions.insert(u);
    if (count_) out.witness_count = s.witnesses;
    return out;
  }

 private:
  struct State {
    std::uint64_t unions = 0;
    mpz_class witnesses = 0;
  };

  std::uint64_t encode(std::size_t pos, const std::vector<std::int64_t>& b) {
    std::uint64_t code = pos;
    for (int i = 0; i < n_; ++i) code = code << 5 | static_cast<std::uint64_t>(b[i]);
    return code;
  }

  State search(std::size_t pos, std::vector<std::int64_t>& budgets) {
    Mask open = 0;
    for (int i = 0; i < n_; ++i)
      if (budgets[i] > 0) open |= Mask{1} << i;
    if ((open & ~cover_[pos]) != 0) return {};
    if (pos == keys_.size()) return State{1, 1};

    const std::uint64_t code = encode(pos, budgets);
    if (auto it = memo_.find(code); it != memo_.end()) return it->second;

    const Mask key = keys_[pos];
    std::int64_t most = INT64_MAX;
    for (int i = 0; i < n_; ++i)
      if (key >> i & 1u) most = std::min(most, budgets[i]);

    State out;
    for (std::int64_t t = 0; t <= most; ++t) {
      if (t > 0)
        for (int i = 0; i < n_; ++i)
          if (key >> i & 1u) --budgets[i];
      const State sub = search(pos + 1, budgets);
      out.unions |= sub.unions << t;
      if (count_) out.witnesses += sub.witnesses;
    }
    for (int i = 0; i < n_; ++i)
      if (key >> i & 1u) budgets[i] += most;

    memo_.emplace(code, out);
    return out;
  }

  int n_;
  std::vector<Mask> keys_;
  std::vector<Mask> cover_;
  std::vector<std::int64_t> start_;
  bool count_;
  std::unordered_map<std::uint64_t, State> memo_;
};

}  // namespace

Enumeration enumerate(const std::vector<std::int64_t>& sizes, int k,
                      const std::set<int>& allowed, bool count_witnesses,
                      int max_sets) {
  const int n = static_cast<int>(sizes.size());
  if (n < 2 || k < 2 || k > n)
    throw Error(ErrorKind::invalid_input, "oracle needs n >= 2, 2 <= k <= n");
  if (n > max_sets)
    throw Error(ErrorKind::too_large,
                "oracle limited to n <= " + std::to_string(max_sets));
  std::int64_t sigma = 0;
  for (auto a : sizes) {
    if (a < 0) throw Error(ErrorKind::invalid_input, "negative size");
    sigma += a;
  }
  if (sigma > kMaxTotal)
    throw Error(ErrorKind::too_large,
                "oracle limited to sum of sizes <= " + std::to_string(kMaxTotal));

  std::vector<Mask> keys;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    const int c = std::popcount(m);
    if (c < k && allowed.count(c)) keys.push_back(m);
  }
  // Larger keys first: they draw on several budgets at once and prune early.
  std::sort(keys.begin(), keys.end(), [](Mask x, Mask y) {
    const int cx = std::popcount(x), cy = std::popcount(y);
    if (cx != cy) return cx > cy;
    return members(x) < members(y);
  });

  return Enumerator(sizes, std::move(keys), count_witnesses).run();
}

std::set<std::int64_t> achievable_unions_restricted(
    const std::vector<std::int64_t>& sizes, int k,
    const std::set<int>& allowed) {
  return enumerate(sizes, k, allowed, false).unions;
}

std::set<std::int64_t> achievable_unions(const std::vector<std::int64_t>& sizes,
                                         int k) {
  std::set<int> allowed;
  for (int c = 1; c < k; ++c) allowed.insert(c);
  return achievable_unions_restricted(sizes, k, allowed);
}

CounterexampleReport addendum_counterexample(int n) {
  if (n < 5)
    throw Error(ErrorKind::invalid_input, "counterexample needs n >= 5");
  if (n > kMaxCounterexampleSets)
    throw Error(ErrorKind::too_large,
                "counterexample limited to n <= " +
                    std::to_string(kMaxCounterexampleSets));

  CounterexampleReport r;
  r.n = n;
  r.counting_lower = (n + (n - 1) - 1) / (n - 1);
  const std::vector<std::int64_t> ones(n, 1);

  std::set<int> all, two_layer{n - 1, n - 2};
  for (int c = 1; c < n; ++c) all.insert(c);
  r.unrestricted = enumerate(ones, n, all, false, kMaxCounterexampleSets).unions;
  r.restricted =
      enumerate(ones, n, two_layer, false, kMaxCounterexampleSets).unions;
  r.lower_achievable_unrestricted = r.unrestricted.count(r.counting_lower) > 0;
  r.restricted_reaches_lower =
      !r.restricted.empty() && *r.restricted.begin() <= r.counting_lower;

  // Every way to place n singleton sets on two points x=1, y=2 using both.
  std::set<WeightSystem::Map> systems;
  for (std::uint32_t assign = 1; assign + 1 < (1u << n); ++assign) {
    std::vector<std::vector<ElementId>> sets(n);
    for (int i = 0; i < n; ++i) sets[i] = {(assign >> i & 1u) ? 2 : 1};
    systems.insert(decompose(sets).weights());
  }
  r.union_two_witnesses = systems.size();
  r.all_two_key_partitions = true;
  for (const auto& weights : systems) {
    bool partition = weights.size() == 2;
    std::vector<int> covered;
    bool restricted_support = true;
    for (const auto& [key, w] : weights) {
      partition = partition && w == 1;
      covered.insert(covered.end(), key.indices().begin(), key.indices().end());
      restricted_support = restricted_support && two_layer.count(key.size());
    }
    std::sort(covered.begin(), covered.end());
    std::vector<int> everyone(n);
    for (int i = 0; i < n; ++i) everyone[i] = i + 1;
    partition = partition && covered == everyone;
    r.all_two_key_partitions = r.all_two_key_partitions && partition;
    r.any_within_restricted_support =
        r.any_within_restricted_support || restricted_support;
  }

  r.addendum_fails = r.lower_achievable_unrestricted &&
                     !r.restricted_reaches_lower && r.all_two_key_partitions &&
                     !r.any_within_restricted_support;
  return r;
}

}  // namespace kwise::oracle
