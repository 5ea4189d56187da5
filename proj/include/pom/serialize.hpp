#pragma once
// JSON round-tripping of measurement setups.  Schema:
//   {"n": int, "dim": int, "state": [[re, im], ...],
//    "alice": [matrix, ...], "bob": [matrix, ...]}
// with matrices as row-major [[re, im], ...] lists.  Doubles survive the
// round trip bit-exactly.

#include <json.hpp>

#include "pom/construct.hpp"

namespace pom {

using Json = nlohmann::ordered_json;

Json setup_to_json(const MeasurementSetup& setup);

// Accepts either the bare schema above or a CLI report wrapping it under
// "results".
MeasurementSetup setup_from_json(const nlohmann::json& j);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace pom
