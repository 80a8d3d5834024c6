#pragma once

#include <json.hpp>

#include "mcm/extint.hpp"
#include "mcm/matrix.hpp"

namespace mcm {

using Json = nlohmann::ordered_json;

// {"rows":r,"cols":c,"field":"Q"|"Fp:<p>","entries":[...]} row-major, entries
// serialized as "p/q" strings / canonical representatives.
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json extint_to_json(const ExtInt& v);

}  // namespace mcm
