#pragma once

#include <json.hpp>

#include "crgstir/colored.hpp"
#include "crgstir/qpoly.hpp"
#include "crgstir/stirling.hpp"

namespace crgstir {

using Json = nlohmann::ordered_json;

// Polynomials: ascending coefficients as decimal strings. BivarPoly: one
// such array per power of t.
Json to_json(const IntPoly& p);
Json to_json(const BivarPoly& p);
IntPoly poly_from_json(const Json& j);
BivarPoly bivar_from_json(const Json& j);

// Partitions: {"flavor", "m", "n", "zero": [...], "tuples": [[[...]...]...]}
// with elements as "i^c" strings and the zero element as "0".
Json to_json(const ColoredPartition& p);
Json to_json(const SuperPartition& p);
Json to_json(const OrderedPartition& p);

ColoredPartition partition_from_json(const Json& j);
SuperPartition super_from_json(const Json& j);
OrderedPartition ordered_from_json(const Json& j);

Json to_json(const VerificationReport& r);

}  // namespace crgstir
