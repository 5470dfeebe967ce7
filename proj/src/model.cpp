#include "kwise/model.hpp"

#include <algorithm>
#include <string>

namespace kwise {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::malformed_witness: return "malformed-witness";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::infeasible_for_extreme: return "infeasible-for-extreme";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::invalid_pair: return "invalid-pair";
    case ErrorKind::overdraw: return "overdraw";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::cannot_increment: return "cannot-increment";
    case ErrorKind::mode_mismatch: return "mode-mismatch";
    case ErrorKind::too_large: return "too-large";
  }
  return "unknown";
}

const char* to_string(Mode mode) {
  return mode == Mode::counting ? "counting" : "measure";
}

Mode parse_mode(std::string_view text) {
  if (text == "counting") return Mode::counting;
  if (text == "measure") return Mode::measure;
  throw Error(ErrorKind::invalid_input,
              "mode must be counting or measure, got \"" + std::string(text) +
                  "\"");
}

Instance::Instance(std::vector<Rational> sizes, int k, Mode mode)
    : sizes_(std::move(sizes)), k_(k), mode_(mode) {
  if (sizes_.size() < 2)
    throw Error(ErrorKind::invalid_input, "need at least two sets");
  if (k_ < 2 || k_ > n())
    throw Error(ErrorKind::invalid_input,
                "k must satisfy 2 <= k <= n (k=" + std::to_string(k_) +
                    ", n=" + std::to_string(n()) + ")");
  for (auto& a : sizes_) {
    a.canonicalize();
    if (sgn(a) < 0)
      throw Error(ErrorKind::invalid_input, "negative size " + a.get_str());
    if (mode_ == Mode::counting && !is_integer(a))
      throw Error(ErrorKind::invalid_input,
                  "counting mode needs integer sizes, got " + a.get_str());
  }
}

SubsetKey::SubsetKey(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty())
    throw Error(ErrorKind::invalid_input, "empty subset key");
  std::sort(indices_.begin(), indices_.end());
  if (indices_.front() < 1)
    throw Error(ErrorKind::invalid_input, "subset key indices start at 1");
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw Error(ErrorKind::invalid_input, "duplicate index in subset key");
}

bool SubsetKey::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

WeightSystem::WeightSystem(int n) : n_(n) {
  if (n < 0) throw Error(ErrorKind::invalid_input, "negative dimension");
}

Rational WeightSystem::weight(const SubsetKey& key) const {
  auto it = weights_.find(key);
  return it == weights_.end() ? Rational(0) : it->second;
}

void WeightSystem::add(const SubsetKey& key, const Rational& delta) {
  if (key.max_index() > n_)
    throw Error(ErrorKind::malformed_witness,
                "key index " + std::to_string(key.max_index()) +
                    " exceeds n=" + std::to_string(n_));
  if (sgn(delta) == 0) return;
  auto it = weights_.find(key);
  Rational next = (it == weights_.end() ? Rational(0) : it->second) + delta;
  if (sgn(next) < 0)
    throw Error(ErrorKind::malformed_witness,
                "weight would become negative: " + next.get_str());
  if (sgn(next) == 0) {
    weights_.erase(it);
  } else if (it == weights_.end()) {
    weights_.emplace(key, std::move(next));
  } else {
    it->second = std::move(next);
  }
}

int WeightSystem::max_cardinality() const {
  int m = 0;
  for (const auto& [key, w] : weights_) m = std::max(m, key.size());
  return m;
}

bool WeightSystem::is_admissible(int k) const {
  return max_cardinality() <= k - 1;
}

bool WeightSystem::is_integral() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const auto& kv) { return is_integer(kv.second); });
}

WeightSystem normalize(int n, std::span<const WeightEntry> entries) {
  WeightSystem out(n);
  std::map<SubsetKey, bool> seen;
  for (const auto& e : entries) {
    SubsetKey key = [&] {
      try {
        return SubsetKey(e.key);
      } catch (const Error& err) {
        throw Error(ErrorKind::malformed_witness, err.what());
      }
    }();
    if (sgn(e.weight) < 0)
      throw Error(ErrorKind::malformed_witness,
                  "negative weight " + e.weight.get_str());
    if (!seen.emplace(key, true).second)
      throw Error(ErrorKind::malformed_witness, "duplicate key in witness");
    out.add(key, e.weight);
  }
  return out;
}

WeightSystem normalize(const WeightSystem& w) { return w; }

DerivedSizes derived_sizes(const WeightSystem& w) {
  DerivedSizes d{std::vector<Rational>(w.n(), Rational(0)), Rational(0)};
  for (const auto& [key, weight] : w.weights()) {
    for (int i : key.indices()) d.per_set[i - 1] += weight;
    d.union_size += weight;
  }
  return d;
}

WeightSystem operator+(const WeightSystem& lhs, const WeightSystem& rhs) {
  if (lhs.n() != rhs.n())
    throw Error(ErrorKind::invalid_input, "dimension mismatch in sum");
  WeightSystem out = lhs;
  for (const auto& [key, w] : rhs.weights()) out.add(key, w);
  return out;
}

bool satisfies_union_lower_bound(const WeightSystem& w, int k) {
  if (k < 2 || !w.is_admissible(k)) return false;
  const DerivedSizes d = derived_sizes(w);
  Rational total = 0;
  for (const auto& s : d.per_set) total += s;
  const Rational scaled_union = Rational(k - 1) * d.union_size;
  if (scaled_union < total) return false;
  if (scaled_union == total)
    for (const auto& [key, weight] : w.weights())
      if (key.size() != k - 1) return false;
  return true;
}

}  // namespace kwise
