#include "kwise/realize_measure.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "kwise/witness.hpp"
#include "test_support.hpp"

namespace kwise {
namespace {

using testing::Q;
using testing::W;

ErrorKind kind_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no kwise::Error thrown";
  return ErrorKind::invalid_input;
}

void ExpectWitness(const WeightSystem& w, const std::vector<Rational>& sizes,
                   int k, const Rational& a) {
  const VerifyReport r = verify(w, Instance(sizes, k, Mode::measure), a);
  EXPECT_TRUE(r.verdict) << "union " << r.union_size.get_str() << " want "
                         << a.get_str();
  EXPECT_GE(r.lower_bound_slack, 0);
  EXPECT_TRUE(satisfies_union_lower_bound(w, k));
}

// Index i moves to to[i-1].
WeightSystem Relabel(const WeightSystem& w, const std::vector<int>& to) {
  WeightSystem out(w.n());
  for (const auto& [key, weight] : w.weights()) {
    std::vector<int> idx;
    for (int i : key.indices()) idx.push_back(to[i - 1]);
    out.add(SubsetKey(idx), weight);
  }
  return out;
}

// Relabels each index by its position in the stable ascending sort of sizes.
WeightSystem Canonical(const WeightSystem& w, const std::vector<Rational>& sizes) {
  std::vector<int> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return sizes[x] < sizes[y]; });
  std::vector<int> to(sizes.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) to[order[pos]] = pos + 1;
  return Relabel(w, to);
}

std::vector<Rational> RandomSizes(std::mt19937_64& rng, int n) {
  std::vector<Rational> s(n);
  for (auto& a : s) a = testing::random_rational(rng, 6, 12);
  if (rng() % 5 == 0) s[rng() % n] = 0;
  return s;
}

TEST(SolveExtremeTest, ClosedFormOneOneTwo) {
  EXPECT_EQ(solve_extreme(Q({"1", "1", "2"})), W(3, {{{2, 3}, "1"}, {{1, 3}, "1"}}));
  EXPECT_EQ(derived_sizes(solve_extreme(Q({"1", "1", "2"}))).union_size, 2);
}

TEST(SolveExtremeTest, EqualSizesSplitEvenly) {
  const WeightSystem w = solve_extreme(Q({"1", "1", "1"}));
  EXPECT_EQ(w, W(3, {{{1, 2}, "1/2"}, {{1, 3}, "1/2"}, {{2, 3}, "1/2"}}));
  EXPECT_EQ(derived_sizes(w).union_size, Rational(3, 2));
}

TEST(SolveExtremeTest, AllZero) {
  EXPECT_TRUE(solve_extreme(Q({"0", "0"})).empty());
}

TEST(SolveExtremeTest, RejectsDominantSet) {
  EXPECT_EQ(kind_of([] { solve_extreme(Q({"1", "1", "5"})); }),
            ErrorKind::infeasible_for_extreme);
}

TEST(RealizeLowerTest, BalancedTriple) {
  const WeightSystem w = realize_lower(Q({"2", "2", "2"}), 3);
  EXPECT_EQ(w, W(3, {{{1, 2}, "1"}, {{1, 3}, "1"}, {{2, 3}, "1"}}));
}

TEST(RealizeLowerTest, DominantSet) {
  const WeightSystem w = realize_lower(Q({"1", "1", "5"}), 3);
  ExpectWitness(w, Q({"1", "1", "5"}), 3, 5);
  EXPECT_GT(verify(w, Instance(Q({"1", "1", "5"}), 3, Mode::measure), 5).lower_bound_slack, 0);
}

TEST(RealizeLowerTest, AllZero) {
  EXPECT_TRUE(realize_lower(Q({"0", "0", "0", "0"}), 3).empty());
  EXPECT_TRUE(realize_lower(Q({"0", "0", "0", "0"}), 4).empty());
}

TEST(RealizeLowerTest, ZeroRowsStayAbsent) {
  const std::vector<Rational> sizes = Q({"0", "3", "0", "2", "2", "1"});
  const WeightSystem w = realize_lower(sizes, 3);
  ExpectWitness(w, sizes, 3, 4);
  for (const auto& [key, weight] : w.weights()) {
    EXPECT_FALSE(key.contains(1));
    EXPECT_FALSE(key.contains(3));
  }
}

TEST(RealizeLowerTest, RejectsBadK) {
  EXPECT_EQ(kind_of([] { realize_lower(Q({"1", "1"}), 3); }), ErrorKind::invalid_input);
  EXPECT_EQ(kind_of([] { realize_lower(Q({"1", "-1"}), 2); }), ErrorKind::invalid_input);
}

TEST(RealizeUpperTest, Singletons) {
  EXPECT_EQ(realize_upper(Q({"2", "3"})), W(2, {{{1}, "2"}, {{2}, "3"}}));
  EXPECT_EQ(realize_upper(Q({"0", "1"})), W(2, {{{2}, "1"}}));
  EXPECT_EQ(derived_sizes(realize_upper(Q({"1", "1", "1"}))).union_size, 3);
}

TEST(InterpolateTest, Endpoints) {
  const WeightSystem lo = realize_lower(Q({"2", "2", "2"}), 3);
  const WeightSystem hi = realize_upper(Q({"2", "2", "2"}));
  EXPECT_EQ(interpolate(lo, hi, 3), lo);
  EXPECT_EQ(interpolate(lo, hi, 6), hi);
  EXPECT_EQ(interpolate(lo, lo, 3), lo);
}

TEST(InterpolateTest, HalfwayBlend) {
  const WeightSystem w = interpolate(realize_lower(Q({"2", "2", "2"}), 3),
                                     realize_upper(Q({"2", "2", "2"})), Rational(9, 2));
  ExpectWitness(w, Q({"2", "2", "2"}), 3, Rational(9, 2));
  EXPECT_EQ(w, W(3, {{{1, 2}, "1/2"}, {{1, 3}, "1/2"}, {{2, 3}, "1/2"},
                     {{1}, "1"}, {{2}, "1"}, {{3}, "1"}}));
}

TEST(InterpolateTest, Errors) {
  const WeightSystem lo = realize_lower(Q({"2", "2", "2"}), 3);
  const WeightSystem hi = realize_upper(Q({"2", "2", "2"}));
  EXPECT_EQ(kind_of([&] { interpolate(lo, hi, 7); }), ErrorKind::out_of_range);
  EXPECT_EQ(kind_of([&] { interpolate(lo, hi, 2); }), ErrorKind::out_of_range);
  EXPECT_EQ(kind_of([&] { interpolate(lo, realize_upper(Q({"2", "2", "3"})), 4); }),
            ErrorKind::invalid_pair);
}

TEST(LeakTest, NoDrainIsIdentity) {
  const WeightSystem w = realize_lower(Q({"2", "2", "2"}), 3);
  EXPECT_EQ(leak(w, {}, 3), w);
  EXPECT_EQ(leak(w, {{SubsetKey{1, 2}, Rational(0)}}, 3), w);
}

TEST(LeakTest, FullDrainOfOnePair) {
  const WeightSystem w = realize_lower(Q({"2", "2", "2"}), 3);
  const WeightSystem out = leak(w, {{SubsetKey{1, 2}, Rational(1)}}, 3);
  EXPECT_EQ(out, W(3, {{{1, 3}, "1"}, {{2, 3}, "1"}, {{1}, "1"}, {{2}, "1"}}));
  ExpectWitness(out, Q({"2", "2", "2"}), 3, 4);
}

TEST(LeakTest, HalfDrain) {
  const WeightSystem w = realize_lower(Q({"2", "2", "2"}), 3);
  ExpectWitness(leak(w, {{SubsetKey{1, 2}, Rational(1, 2)}}, 3), Q({"2", "2", "2"}), 3,
                Rational(7, 2));
}

TEST(LeakTest, SpreadsOverFacesForLargerK) {
  // k = 4: drain x from a triple adds x/2 to each of its three pairs.
  const WeightSystem w = W(4, {{{1, 2, 3}, "2"}});
  const WeightSystem out = leak(w, {{SubsetKey{1, 2, 3}, Rational(1)}}, 4);
  EXPECT_EQ(out, W(4, {{{1, 2, 3}, "1"}, {{1, 2}, "1/2"}, {{1, 3}, "1/2"}, {{2, 3}, "1/2"}}));
  EXPECT_EQ(derived_sizes(out).per_set, derived_sizes(w).per_set);
  EXPECT_EQ(derived_sizes(out).union_size, Rational(5, 2));
}

TEST(LeakTest, Errors) {
  const WeightSystem w = realize_lower(Q({"2", "2", "2"}), 3);
  EXPECT_EQ(kind_of([&] { leak(w, {{SubsetKey{1, 2}, Rational(2)}}, 3); }),
            ErrorKind::overdraw);
  EXPECT_EQ(kind_of([&] { leak(w, {{SubsetKey{1}, Rational(1)}}, 3); }),
            ErrorKind::invalid_input);
  EXPECT_EQ(kind_of([&] { leak(realize_upper(Q({"1", "1"})), {}, 2); }),
            ErrorKind::unsupported);
}

TEST(RealizeAddendumTest, Endpoints) {
  const auto sizes = Q({"2", "2", "2"});
  EXPECT_EQ(realize_addendum(sizes, 3, 3), realize_lower(sizes, 3));
  EXPECT_EQ(realize_addendum(sizes, 3, 4),
            W(3, {{{1, 3}, "1"}, {{2, 3}, "1"}, {{1}, "1"}, {{2}, "1"}}));
  EXPECT_EQ(realize_addendum(sizes, 3, 6), realize_upper(sizes));
}

TEST(RealizeAddendumTest, Preconditions) {
  EXPECT_EQ(kind_of([] { realize_addendum(Q({"2", "2", "2"}), 3, 7); }),
            ErrorKind::precondition);
  EXPECT_EQ(kind_of([] { realize_addendum(Q({"2", "2", "2"}), 3, Rational(5, 2)); }),
            ErrorKind::precondition);
  EXPECT_EQ(kind_of([] { realize_addendum(Q({"1", "1", "5"}), 3, 5); }),
            ErrorKind::precondition);
  EXPECT_EQ(kind_of([] { realize_addendum(Q({"1", "1"}), 2, 2); }),
            ErrorKind::precondition);
}

TEST(RealizeMeasureTest, Examples) {
  const Instance ones(Q({"1", "1", "1"}), 3, Mode::measure);
  EXPECT_EQ(realize_measure(ones, 3), realize_upper(ones.sizes()));
  EXPECT_EQ(realize_measure(ones, Rational(3, 2)),
            W(3, {{{1, 2}, "1/2"}, {{1, 3}, "1/2"}, {{2, 3}, "1/2"}}));
  const Instance skewed(Q({"1", "1", "5"}), 3, Mode::measure);
  EXPECT_EQ(realize_measure(skewed, 5), realize_lower(skewed.sizes(), 3));
}

TEST(RealizeMeasureTest, InfeasibleCarriesReport) {
  const Instance ones(Q({"1", "1", "1"}), 3, Mode::measure);
  try {
    realize_measure(ones, Rational(5, 4));
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::infeasible);
    EXPECT_EQ(e.report().lower, Rational(3, 2));
    EXPECT_EQ(e.report().upper, 3);
  }
  EXPECT_EQ(kind_of([] {
              realize_measure(Instance(Q({"1", "1"}), 2, Mode::counting), 2);
            }),
            ErrorKind::mode_mismatch);
}

TEST(RealizeMeasurePropertyTest, LowerWitnessesAreExact) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int k = 2 + static_cast<int>(rng() % (n - 1));
    const auto sizes = RandomSizes(rng, n);
    const FeasibilityReport r = bounds(Instance(sizes, k, Mode::measure));
    const WeightSystem w = realize_lower(sizes, k);
    ExpectWitness(w, sizes, k, r.lower);
    Rational max_size = *std::max_element(sizes.begin(), sizes.end());
    if (r.a_bar >= max_size)
      for (const auto& [key, weight] : w.weights()) EXPECT_EQ(key.size(), k - 1);
  }
}

TEST(RealizeMeasurePropertyTest, PermutationEquivariant) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int k = 2 + static_cast<int>(rng() % (n - 1));
    auto sizes = RandomSizes(rng, n);
    if (trial % 3 == 0) sizes[rng() % n] = sizes[rng() % n];  // force ties
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Rational> permuted(n);
    for (int i = 0; i < n; ++i) permuted[perm[i]] = sizes[i];

    const WeightSystem w = realize_lower(sizes, k);
    const WeightSystem wp = realize_lower(permuted, k);
    EXPECT_EQ(Canonical(w, sizes), Canonical(wp, permuted));

    std::vector<Rational> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
      std::vector<int> to(n);
      for (int i = 0; i < n; ++i) to[i] = perm[i] + 1;
      EXPECT_EQ(Relabel(w, to), wp);
    }
  }
}

TEST(RealizeMeasurePropertyTest, ManySets) {
  std::mt19937_64 rng(53);
  for (int n : {20, 40, 64, 90}) {
    for (int k : {2, 3, n / 2, n - 1, n}) {
      const auto sizes = RandomSizes(rng, n);
      const Instance inst(sizes, k, Mode::measure);
      const FeasibilityReport r = bounds(inst);
      ExpectWitness(realize_measure(inst, r.lower), sizes, k, r.lower);
      ExpectWitness(realize_measure(inst, (r.lower + r.upper) / 2), sizes, k,
                    (r.lower + r.upper) / 2);
    }
  }
}

TEST(RealizeMeasurePropertyTest, AddendumSweep) {
  std::mt19937_64 rng(29);
  int checked = 0;
  while (checked < 200) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int k = 3 + static_cast<int>(rng() % (n - 2));
    const auto sizes = RandomSizes(rng, n);
    const Rational sigma = testing::sum(sizes);
    const Rational low = sigma / (k - 1), high = sigma / (k - 2);
    if (*std::max_element(sizes.begin(), sizes.end()) > low || sgn(sigma) == 0) continue;
    ++checked;
    for (int step = 0; step <= 4; ++step) {
      const Rational a = low + (high - low) * step / 4;
      const WeightSystem w = realize_addendum(sizes, k, a);
      ExpectWitness(w, sizes, k, a);
      for (const auto& [key, weight] : w.weights())
        EXPECT_TRUE(key.size() == k - 1 || key.size() == k - 2);
    }
  }
}

}  // namespace
}  // namespace kwise
