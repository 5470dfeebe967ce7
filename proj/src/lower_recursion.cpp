#include "lower_recursion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "kwise/realize_measure.hpp"

namespace kwise {
namespace detail {
namespace {

using Sizes = std::vector<Rational>;

Rational sum(const Sizes& s) {
  return std::accumulate(s.begin(), s.end(), Rational(0));
}

SubsetKey range_key(int first, int last) {
  std::vector<int> idx(last - first + 1);
  std::iota(idx.begin(), idx.end(), first);
  return SubsetKey(std::move(idx));
}

// Relabels local index j (1-based) as to[j - 1].
WeightSystem relabel(const WeightSystem& w, int n_out,
                     const std::vector<int>& to) {
  WeightSystem out(n_out);
  for (const auto& [key, weight] : w.weights()) {
    std::vector<int> idx;
    idx.reserve(key.indices().size());
    for (int i : key.indices()) idx.push_back(to[i - 1]);
    out.add(SubsetKey(std::move(idx)), weight);
  }
  return out;
}

class LowerBuilder {
 public:
  LowerBuilder(bool integral, int top_n) : integral_(integral), top_n_(top_n) {}

  // Accepts unsorted sizes; sorts stably and maps the witness back.
  WeightSystem solve(const Sizes& sizes, int k, int depth) {
    const int n = static_cast<int>(sizes.size());
    if (depth + n > top_n_ || depth > top_n_)
      throw std::logic_error("lower recursion deeper than n");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return sizes[x] < sizes[y]; });
    Sizes sorted(n);
    std::vector<int> to(n);
    for (int j = 0; j < n; ++j) {
      sorted[j] = sizes[order[j]];
      to[j] = order[j] + 1;
    }

    WeightSystem w = relabel(solve_sorted(sorted, k, depth), n, to);
    check(w, sizes, k);
    return w;
  }

 private:
  WeightSystem solve_sorted(const Sizes& s, int k, int depth) {
    const int n = static_cast<int>(s.size());
    const Rational sigma = sum(s);
    if (sgn(sigma) == 0) return WeightSystem(n);

    // Zero rows take no part; drop them while at least k rows remain.
    const auto first_positive = static_cast<int>(
        std::find_if(s.begin(), s.end(), [](const Rational& a) {
          return sgn(a) > 0;
        }) - s.begin());
    if (first_positive > 0 && n - first_positive >= k) {
      Sizes positive(s.begin() + first_positive, s.end());
      std::vector<int> to(positive.size());
      std::iota(to.begin(), to.end(), first_positive + 1);
      return relabel(solve(positive, k, depth + 1), n, to);
    }

    if (k == 2) return disjoint(s);

    const Rational a_bar = sigma / (k - 1);
    if (a_bar <= s.back()) return stack_largest(s, k, depth);
    if (integral_ && !is_integer(a_bar)) return spread_remainder(s, k, depth);
    return balanced(s, k, depth);
  }

  static WeightSystem disjoint(const Sizes& s) {
    WeightSystem w(static_cast<int>(s.size()));
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
      w.add(SubsetKey{i + 1}, s[i]);
    return w;
  }

  // a_n dominates: realize the first n-1 sets with k-1 at their own lower
  // bound, then make A_n their union plus a fresh block of the residual.
  WeightSystem stack_largest(const Sizes& s, int k, int depth) {
    const int n = static_cast<int>(s.size());
    const Sizes head(s.begin(), s.end() - 1);
    const WeightSystem sub = solve(head, k - 1, depth + 1);

    WeightSystem w(n);
    Rational sub_union = 0;
    for (const auto& [key, weight] : sub.weights()) {
      std::vector<int> idx = key.indices();
      idx.push_back(n);
      w.add(SubsetKey(std::move(idx)), weight);
      sub_union += weight;
    }
    const Rational residual = s.back() - sub_union;
    if (sgn(residual) < 0)
      throw std::logic_error("largest set smaller than union of the others");
    w.add(SubsetKey{n}, residual);
    return w;
  }

  // Requires a_bar >= a_n, and a_bar integral in counting mode.
  WeightSystem balanced(const Sizes& s, int k, int depth) {
    const int n = static_cast<int>(s.size());
    const Rational a_bar = sum(s) / (k - 1);
    if (a_bar <= s.back()) return stack_largest(s, k, depth);
    if (k == n) return solve_extreme(s);

    const Rational b = a_bar - s.back();
    if (b <= s.front()) {
      // Shave b off the k-1 smallest; what is left has a_bar' = a_n.
      Sizes shaved = s;
      for (int i = 0; i < k - 1; ++i) shaved[i] -= b;
      WeightSystem w = stack_largest(shaved, k, depth);
      w.add(range_key(1, k - 1), b);
      return w;
    }

    // Peel A_1 off entirely as a block shared with A_2..A_{k-1}.
    const Rational a1 = s.front();
    Sizes rest(s.begin() + 1, s.end());
    for (int i = 0; i < k - 2; ++i) rest[i] -= a1;
    std::vector<int> to(n - 1);
    std::iota(to.begin(), to.end(), 2);
    WeightSystem w = relabel(solve(rest, k, depth + 1), n, to);
    w.add(range_key(1, k - 1), a1);
    return w;
  }

  // Counting mode with (k-1) not dividing sigma: take one element from each
  // of the r smallest sets, solve the divisible case, then give those r sets
  // one shared element back.
  WeightSystem spread_remainder(const Sizes& s, int k, int depth) {
    Integer r;
    const Integer total = sum(s).get_num();
    mpz_fdiv_r_ui(r.get_mpz_t(), total.get_mpz_t(),
                  static_cast<unsigned long>(k - 1));
    const int count = static_cast<int>(r.get_si());
    if (count <= 0 || count >= k - 1)
      throw std::logic_error("remainder out of range");
    Sizes reduced = s;
    for (int i = 0; i < count; ++i) {
      if (sgn(reduced[i]) <= 0)
        throw std::logic_error("remainder reduction hit an empty set");
      reduced[i] -= 1;
    }
    WeightSystem w = balanced(reduced, k, depth);
    w.add(range_key(1, count), Rational(1));
    return w;
  }

  void check(const WeightSystem& w, const Sizes& sizes, int k) const {
    const DerivedSizes d = derived_sizes(w);
    if (d.per_set != sizes)
      throw std::logic_error("lower witness row sums differ from sizes");
    if (d.union_size != lower_union(sizes, k, integral_))
      throw std::logic_error("lower witness misses the lower bound");
    if (!w.is_admissible(k))
      throw std::logic_error("lower witness has a key of cardinality >= k");
    if (integral_ && !w.is_integral())
      throw std::logic_error("non-integer weight in counting construction");
  }

  bool integral_;
  int top_n_;
};

}  // namespace

Rational lower_union(std::span<const Rational> sizes, int k, bool integral) {
  Rational sigma = 0, max_size = 0;
  for (const auto& a : sizes) {
    sigma += a;
    max_size = std::max(max_size, a);
  }
  Rational a_bar = sigma / (k - 1);
  if (integral) a_bar = Rational(ceil(a_bar));
  return std::max(max_size, a_bar);
}

WeightSystem lower_witness(std::span<const Rational> sizes, int k,
                           bool integral) {
  const Sizes s(sizes.begin(), sizes.end());
  LowerBuilder builder(integral, static_cast<int>(s.size()));
  return builder.solve(s, k, 0);
}

}  // namespace detail

WeightSystem solve_extreme(std::span<const Rational> sizes) {
  const int n = static_cast<int>(sizes.size());
  if (n < 2) throw Error(ErrorKind::invalid_input, "need at least two sets");
  Rational sigma = 0;
  for (const auto& a : sizes) {
    if (sgn(a) < 0)
      throw Error(ErrorKind::invalid_input, "negative size " + a.get_str());
    sigma += a;
  }
  const Rational a_bar = sigma / (n - 1);
  WeightSystem w(n);
  for (int i = 1; i <= n; ++i) {
    const Rational& a = sizes[i - 1];
    if (a > a_bar)
      throw Error(ErrorKind::infeasible_for_extreme,
                  "size " + a.get_str() + " exceeds sigma/(n-1) = " +
                      a_bar.get_str());
    std::vector<int> others;
    for (int j = 1; j <= n; ++j)
      if (j != i) others.push_back(j);
    w.add(SubsetKey(std::move(others)), a_bar - a);
  }
  return w;
}

}  // namespace kwise
