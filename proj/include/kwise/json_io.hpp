#pragma once

#include <json.hpp>

#include "kwise/bounds.hpp"
#include "kwise/model.hpp"
#include "kwise/oracle.hpp"
#include "kwise/witness.hpp"

namespace kwise {

/// Wire formats. All exact numbers travel as canonical strings ("3", "7/2").
/// Objects are emitted with keys in a fixed order and witness keys in
/// lexicographic order, so output is byte-for-byte reproducible.
using Json = nlohmann::ordered_json;

Json to_json(const Instance& inst);
Json to_json(const FeasibilityReport& report);
Json to_json(const WeightSystem& w);
Json to_json(const VerifyReport& report);
Json to_json(const MaterializedWitness& m);
Json to_json(const oracle::CounterexampleReport& report);

/// {"sizes": [string...], "k": int, "mode": "counting"|"measure"}.
Instance instance_from_json(const Json& j);

/// {"weights": [{"key": [int...], "w": string}...]}, normalized against n.
/// Throws Error(malformed_witness) or Error(invalid_input).
WeightSystem witness_from_json(const Json& j, int n);

Rational rational_from_json(const Json& j);

}  // namespace kwise
