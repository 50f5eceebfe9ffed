#pragma once

// JSON forms of the exact types. LaurentPoly: {"e":[...],"c":[...]};
// IntMatrix: {"rows":r,"cols":c,"data":[...]}. Integers that fit in 64 bits
// are JSON numbers, larger ones decimal strings.

#include "heckecell/exactalg.hpp"
#include "heckecell/report.hpp"

#include "json.hpp"

namespace heckecell {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& n);
Integer integer_from_json(const Json& j);

Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const Json& j);

/// {"passed": bool, "checks": [{"name","status","witness"}]}
Json to_json(const Report& r);

}  // namespace heckecell
