#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "kwise/errors.hpp"
#include "kwise/rational.hpp"

namespace kwise {

enum class Mode { counting, measure };

const char* to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Prescribed set sizes a_1..a_n together with the intersection bound k:
/// every k-wise intersection of the sets must be empty.
class Instance {
 public:
  /// Throws Error(invalid_input) unless n >= 2, 2 <= k <= n, every size is
  /// non-negative, and every size is an integer in counting mode.
  Instance(std::vector<Rational> sizes, int k, Mode mode);

  const std::vector<Rational>& sizes() const { return sizes_; }
  int n() const { return static_cast<int>(sizes_.size()); }
  int k() const { return k_; }
  Mode mode() const { return mode_; }

 private:
  std::vector<Rational> sizes_;
  int k_;
  Mode mode_;
};

/// A nonempty set of 1-based set indices in canonical (strictly increasing)
/// form. Keys order lexicographically by their index lists.
class SubsetKey {
 public:
  /// Sorts the indices; throws Error(invalid_input) on an empty list,
  /// duplicates or an index < 1.
  explicit SubsetKey(std::vector<int> indices);
  SubsetKey(std::initializer_list<int> indices)
      : SubsetKey(std::vector<int>(indices)) {}

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  int max_index() const { return indices_.back(); }
  bool contains(int i) const;

  friend auto operator<=>(const SubsetKey&, const SubsetKey&) = default;

 private:
  std::vector<int> indices_;
};

/// Weights of the pure intersections (Venn regions): the weight of key S is
/// the size of the part lying in exactly the sets indexed by S.
///
/// Stored weights are always strictly positive; adding down to zero removes
/// the entry. Keys of any cardinality up to n are representable, so a
/// verifier can be handed (and reject) systems that are not k-admissible.
class WeightSystem {
 public:
  using Map = std::map<SubsetKey, Rational>;

  explicit WeightSystem(int n);

  int n() const { return n_; }
  const Map& weights() const { return weights_; }
  bool empty() const { return weights_.empty(); }

  /// Weight of key, zero when absent.
  Rational weight(const SubsetKey& key) const;

  /// Adds delta to the weight of key. Throws Error(malformed_witness) when the
  /// key mentions an index above n or the result would be negative.
  void add(const SubsetKey& key, const Rational& delta);

  /// Largest key cardinality in the support, 0 when empty.
  int max_cardinality() const;

  /// True iff every key has cardinality <= k - 1.
  bool is_admissible(int k) const;

  bool is_integral() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  int n_;
  Map weights_;
};

/// Raw (key, weight) pair as it arrives from outside, before normalization.
struct WeightEntry {
  std::vector<int> key;
  Rational weight;
};

/// Builds a canonical WeightSystem: keys sorted, zero weights dropped.
/// Negative weights, duplicate keys and out-of-range indices throw
/// Error(malformed_witness).
WeightSystem normalize(int n, std::span<const WeightEntry> entries);
WeightSystem normalize(const WeightSystem& w);

struct DerivedSizes {
  std::vector<Rational> per_set;
  Rational union_size;
};

/// Row sums (size of each set) and the union size of a weight system.
DerivedSizes derived_sizes(const WeightSystem& w);

/// Pointwise sum of two weight maps over the same n.
WeightSystem operator+(const WeightSystem& lhs, const WeightSystem& rhs);

/// Bonferroni-type lower bound check for a k-admissible system:
/// (k - 1) * union >= sum of row sums, and when equality holds every key
/// has cardinality exactly k - 1. Returns false if either part fails.
bool satisfies_union_lower_bound(const WeightSystem& w, int k);

}  // namespace kwise
