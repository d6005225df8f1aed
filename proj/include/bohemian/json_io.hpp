#pragma once

// JSON wire formats.
//
// Matrix:  {"n": int, "shape": "uh"|"uht"|"full",
//           "upper": [entry...]   (uh, row-major upper triangle)
//           "t": [entry...]       (uht, first row)
//           "entries": [entry...] (full, row-major)
//           "subdiag": [0|1|2|3, ...]}
// Poly:    {"coeffs": [entry...]} ascending powers.
//
// An entry is a JSON integer, or a string "a", "bi" or "a+bi" with decimal
// arbitrary-precision parts.  Values whose real part exceeds 2^53 or with a
// nonzero imaginary part are emitted in string form.

#include "bohemian/matrix.hpp"
#include "bohemian/poly.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <variant>

namespace bohemian {

using MatrixVariant = std::variant<UHMatrix, UHTMatrix, GMatrix>;

GaussInt entry_from_json(const nlohmann::json& j);
nlohmann::ordered_json entry_to_json(const GaussInt& g);

GaussInt parse_entry_string(const std::string& s);

MatrixVariant matrix_from_json(const nlohmann::json& j);
nlohmann::ordered_json matrix_to_json(const MatrixVariant& m);

Poly poly_from_json(const nlohmann::json& j);
nlohmann::ordered_json poly_to_json(const Poly& p);

}  // namespace bohemian
