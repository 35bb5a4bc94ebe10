#pragma once

// JSON forms of polynomials, characters and identity specs. Numbers are
// decimal strings; characters are referenced by (modulus, exponents).

#include <json.hpp>

#include "qprod/characters.hpp"
#include "qprod/polynomial.hpp"
#include "qprod/products.hpp"

namespace qprod {

/// Integer-coefficient array, lowest degree first. Coefficients outside the
/// int64 range are emitted as decimal strings.
nlohmann::json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RationalPolyFraction& f);

/// {modulus, exponents, value_table, conductor, primitive, principal};
/// value_table[n] is [numerator, order] or null when gcd(n, k) > 1.
nlohmann::json to_json(const DirichletCharacter& chi);
/// Reads {modulus, exponents}; any other fields are ignored.
DirichletCharacter character_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IdentitySpec& spec);
/// Throws std::invalid_argument on unknown ids, fields of the wrong type, or
/// invalid characters.
IdentitySpec spec_from_json(const nlohmann::json& j);

}  // namespace qprod
