#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace kwise::oracle {

// Guardrails for achievable_unions.
inline constexpr int kMaxSets = 6;
inline constexpr std::int64_t kMaxTotal = 24;
// Guardrail for addendum_counterexample.
inline constexpr int kMaxCounterexampleSets = 7;

struct Enumeration {
  std::set<std::int64_t> unions;
  std::optional<mpz_class> witness_count;  // filled when requested
};

/// Every union size of an integer k-admissible weight system with the given
/// row sums, by exhaustive enumeration. Throws Error(too_large) outside the
/// guardrails and Error(invalid_input) on a malformed instance.
std::set<std::int64_t> achievable_unions(const std::vector<std::int64_t>& sizes,
                                         int k);

/// Same, but only keys whose cardinality is in allowed (and below k) may
/// carry weight.
std::set<std::int64_t> achievable_unions_restricted(
    const std::vector<std::int64_t>& sizes, int k,
    const std::set<int>& allowed);

/// Full enumeration entry point; count_witnesses also tallies the systems.
Enumeration enumerate(const std::vector<std::int64_t>& sizes, int k,
                      const std::set<int>& allowed, bool count_witnesses,
                      int max_sets = kMaxSets);

struct CounterexampleReport {
  int n = 0;
  std::int64_t counting_lower = 0;             // ceil(n / (n - 1))
  std::set<std::int64_t> unrestricted;         // all achievable unions
  std::set<std::int64_t> restricted;           // support in {n-1, n-2}
  bool lower_achievable_unrestricted = false;
  bool restricted_reaches_lower = false;       // any value <= counting_lower
  // Union-2 systems found by decomposing every two-point assignment.
  std::size_t union_two_witnesses = 0;
  bool all_two_key_partitions = false;
  bool any_within_restricted_support = false;
  bool addendum_fails = false;
};

/// All sizes 1 and k = n: union 2 is achievable, but not with support on
/// keys of cardinality n-1 and n-2 only. Requires 5 <= n <= 7.
CounterexampleReport addendum_counterexample(int n);

}  // namespace kwise::oracle
