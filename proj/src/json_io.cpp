#include "kwise/json_io.hpp"

#include <string>

namespace kwise {
namespace {

Json numbers(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

Json key_json(const SubsetKey& key) { return Json(key.indices()); }

}  // namespace

Rational rational_from_json(const Json& j) {
  if (!j.is_string())
    throw Error(ErrorKind::invalid_input,
                "exact numbers must be JSON strings, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Json to_json(const Instance& inst) {
  Json j;
  j["sizes"] = numbers(inst.sizes());
  j["k"] = inst.k();
  j["mode"] = to_string(inst.mode());
  return j;
}

Json to_json(const FeasibilityReport& r) {
  Json j;
  j["lower"] = to_string(r.lower);
  j["upper"] = to_string(r.upper);
  j["sigma"] = to_string(r.sigma);
  j["a_bar"] = to_string(r.a_bar);
  j["critical_index"] = r.critical_index;
  return j;
}

Json to_json(const WeightSystem& w) {
  Json arr = Json::array();
  for (const auto& [key, weight] : w.weights()) {
    Json e;
    e["key"] = key_json(key);
    e["w"] = to_string(weight);
    arr.push_back(std::move(e));
  }
  Json j;
  j["n"] = w.n();
  j["weights"] = std::move(arr);
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["dimension_ok"] = r.dimension_ok;
  j["k_admissible"] = r.k_admissible;
  j["integral_ok"] = r.integral_ok;
  j["row_sum_ok"] = r.row_sum_ok;
  j["union_ok"] = r.union_ok;
  j["union"] = to_string(r.union_size);
  j["lower_bound_slack"] = to_string(r.lower_bound_slack);
  return j;
}

Json to_json(const MaterializedWitness& m) {
  Json j;
  if (m.mode == Mode::counting) {
    j["sets"] = m.sets;
    Json universe = Json::array();
    for (const auto& [id, key] : m.universe)
      universe.push_back(Json{{"id", id}, {"key", key_json(key)}});
    j["universe"] = std::move(universe);
  } else {
    Json blocks = Json::array();
    for (const auto& b : m.blocks)
      blocks.push_back(Json{{"key", key_json(b.key)},
                            {"start", to_string(b.start)},
                            {"len", to_string(b.length)}});
    j["blocks"] = std::move(blocks);
  }
  return j;
}

Json to_json(const oracle::CounterexampleReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.n;
  j["counting_lower"] = std::to_string(r.counting_lower);
  Json unrestricted = Json::array(), restricted = Json::array();
  for (auto u : r.unrestricted) unrestricted.push_back(std::to_string(u));
  for (auto u : r.restricted) restricted.push_back(std::to_string(u));
  j["unrestricted"] = std::move(unrestricted);
  j["restricted_cardinalities"] = {r.n - 1, r.n - 2};
  j["restricted"] = std::move(restricted);
  j["lower_achievable_unrestricted"] = r.lower_achievable_unrestricted;
  j["restricted_reaches_lower"] = r.restricted_reaches_lower;
  j["union_two_witnesses"] = r.union_two_witnesses;
  j["all_two_key_partitions"] = r.all_two_key_partitions;
  j["any_within_restricted_support"] = r.any_within_restricted_support;
  j["addendum_fails"] = r.addendum_fails;
  return j;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object())
    throw Error(ErrorKind::invalid_input, "instance must be a JSON object");
  if (!j.contains("sizes") || !j["sizes"].is_array())
    throw Error(ErrorKind::invalid_input, "instance needs a \"sizes\" array");
  if (!j.contains("k") || !j["k"].is_number_integer())
    throw Error(ErrorKind::invalid_input, "instance needs an integer \"k\"");
  std::vector<Rational> sizes;
  for (const auto& s : j["sizes"]) sizes.push_back(rational_from_json(s));
  Mode mode = Mode::counting;
  if (j.contains("mode")) {
    if (!j["mode"].is_string())
      throw Error(ErrorKind::invalid_input, "\"mode\" must be a string");
    mode = parse_mode(j["mode"].get<std::string>());
  }
  return Instance(std::move(sizes), j["k"].get<int>(), mode);
}

WeightSystem witness_from_json(const Json& j, int n) {
  if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array())
    throw Error(ErrorKind::malformed_witness,
                "witness needs a \"weights\" array");
  std::vector<WeightEntry> entries;
  for (const auto& e : j["weights"]) {
    if (!e.is_object() || !e.contains("key") || !e["key"].is_array() ||
        !e.contains("w"))
      throw Error(ErrorKind::malformed_witness,
                  "weight entry needs \"key\" and \"w\": " + e.dump());
    std::vector<int> key;
    for (const auto& i : e["key"]) {
      if (!i.is_number_integer())
        throw Error(ErrorKind::malformed_witness,
                    "key indices must be integers: " + e.dump());
      key.push_back(i.get<int>());
    }
    entries.push_back(WeightEntry{std::move(key), rational_from_json(e["w"])});
  }
  return normalize(n, entries);
}

}  // namespace kwise
