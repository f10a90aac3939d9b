#ifndef BELYI_JSON_IO_HPP
#define BELYI_JSON_IO_HPP

#include <json.hpp>

#include "belyi/funcfield.hpp"

namespace belyi {

using Json = nlohmann::json;

// Field: {"generator": "a", "minpoly": ["756","0","56","0","1"]}; absent = Q.
FieldPtr parse_field(const Json& j);

// Field element: "p/q" (rational) or array of d coordinate strings.
FieldElement parse_field_element(const Json& j, const FieldPtr& field);

// Polynomial: array of field elements, ascending degree.
Polynomial parse_poly(const Json& j, const FieldPtr& field);

// Rational function: {"num": [...], "den": [...]} or a bare coefficient array
// (denominator 1).
RationalFunction parse_ratfun(const Json& j, const FieldPtr& field);

// Curve: {"n": 2, "f": [...]}.
SuperellipticCurve parse_curve(const Json& j, const FieldPtr& field);

// Function-field element: array of n rational functions [r0, r1, ...].
FuncFieldElem parse_funcfield_value(const Json& j, const SuperellipticCurve& curve);

Json ratfun_to_json(const RationalFunction& r);
Json poly_to_json(const Polynomial& p);

// Lifts objects defined over Q into an extension field.
Polynomial lift_poly(const Polynomial& p, const FieldPtr& target);
RationalFunction lift_ratfun(const RationalFunction& r, const FieldPtr& target);

}  // namespace belyi

#endif
