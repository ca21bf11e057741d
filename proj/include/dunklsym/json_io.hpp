#pragma once
#include <json.hpp>
#include "dunklsym/poly.hpp"

namespace dunklsym {

// Scalar: {"order": n, "coeffs": [[num, den], ...]} with string-encoded
// integers, canonical representative, trailing zeros trimmed.
nlohmann::json scalar_to_json(const CycNum& a);
CycNum scalar_from_json(const nlohmann::json& j);

// Polynomial: [{"coeff": <scalar>, "exps": [a,b,c]}, ...] in graded-lex order.
nlohmann::json poly_to_json(const MPoly& f);
MPoly poly_from_json(const nlohmann::json& j);

// Spinor polynomial: {"up": <poly>, "down": <poly>}.
nlohmann::json spinor_to_json(const SpinorPoly& f);
SpinorPoly spinor_from_json(const nlohmann::json& j);

} // namespace dunklsym
