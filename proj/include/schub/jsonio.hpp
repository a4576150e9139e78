#pragma once
// JSON views of the core value types.  Term schema:
//   {"mono": {"x1": 2, "y2": 1, "b": 1}, "num": "3", "den": "2"}
// with arbitrary-precision integers carried as strings.  An algebra element
// serializes as an array of {"word", "window", "coeff"} rows.

#include "json.hpp"
#include "schub/coxalg.hpp"
#include "schub/poly.hpp"

namespace schub {

nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const AlgebraElement& e);

}  // namespace schub
