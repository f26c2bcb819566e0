#pragma once

#include <json.hpp>

#include "rsf/nice_rational.hpp"
#include "rsf/schur.hpp"

namespace rsf {

using Json = nlohmann::json;

/// {"x1":3,...} over the nonzero exponents.
Json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

/// [{"c":"p/q","e":{...}},...]
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"num":[...],"den":[{"kind":"standard","mono":{...},"pow":k},
///  {"kind":"pivoted","zvar":"z1","zexp":c,"mono":{...},"pow":k}]}
Json to_json(const NiceRational& f);
NiceRational nice_rational_from_json(const Json& j);

/// {"N":6,"entries":[{"lambda":[3,1],"m":2},...]}
Json to_json(const SchurExpansion& e);
SchurExpansion schur_expansion_from_json(const Json& j);

}  // namespace rsf
