#pragma once

#include <json.hpp>

#include "practicum/progressions.hpp"
#include "practicum/quadratics.hpp"
#include "practicum/representations.hpp"
#include "practicum/sieve.hpp"

namespace practicum {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings.
Json json_int(const BigInt& v);
BigInt int_from_json(const Json& j);

Json to_json(const PracticalityVerdict& v);
Json to_json(const MultiplierCertificate& c);
Json to_json(const APClassification& c);
Json to_json(const APWitness& w);
Json to_json(const PolyWitness& w);
Json to_json(const MqResult& m);
Json to_json(const QuadClassification& c);
Json to_json(const QuadWitness& w);
Json to_json(const SquareDecomposition& d);
Json to_json(const NonRepresentability& r, bool with_trace);
Json to_json(const PalindromeLink& link);
Json to_json(const DensityRow& row);

PracticalityVerdict verdict_from_json(const Json& j);
MultiplierCertificate certificate_from_json(const Json& j);
SquareDecomposition decomposition_from_json(const Json& j);

}  // namespace practicum
