#include "belyi/json_io.hpp"

namespace belyi {

namespace {

Rational parse_rational_json(const Json& j) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(ErrorKind::SchemaError, "rational must be a string or integer: " + j.dump());
}

}  // namespace

FieldPtr parse_field(const Json& j) {
  if (j.is_null()) return NumberField::rationals();
  if (!j.is_object() || !j.contains("minpoly"))
    fail(ErrorKind::SchemaError, "field needs a minpoly array");
  std::vector<Rational> mp;
  for (const auto& c : j.at("minpoly")) mp.push_back(parse_rational_json(c));
  std::string name = j.value("generator", "a");
  return NumberField::create(std::move(mp), std::move(name));
}

FieldElement parse_field_element(const Json& j, const FieldPtr& field) {
  if (j.is_string() || j.is_number_integer())
    return FieldElement::from_rational(field, parse_rational_json(j));
  if (j.is_array()) {
    if (static_cast<int>(j.size()) > field->degree())
      fail(ErrorKind::SchemaError, "coordinate vector longer than the field degree");
    std::vector<Rational> coords;
    for (const auto& c : j) coords.push_back(parse_rational_json(c));
    return FieldElement(field, std::move(coords));
  }
  fail(ErrorKind::SchemaError, "field element must be a string or array: " + j.dump());
}

Polynomial parse_poly(const Json& j, const FieldPtr& field) {
  if (!j.is_array()) fail(ErrorKind::SchemaError, "polynomial must be an array");
  std::vector<FieldElement> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_field_element(c, field));
  return Polynomial(std::move(coeffs));
}

RationalFunction parse_ratfun(const Json& j, const FieldPtr& field) {
  if (j.is_array()) {
    Polynomial num = parse_poly(j, field);
    return RationalFunction(num, Polynomial::constant(FieldElement::one(field)));
  }
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    fail(ErrorKind::SchemaError, "rational function needs num and den");
  Polynomial num = parse_poly(j.at("num"), field);
  Polynomial den = parse_poly(j.at("den"), field);
  if (den.is_zero()) fail(ErrorKind::SchemaError, "zero denominator");
  return RationalFunction(num, den);
}

SuperellipticCurve parse_curve(const Json& j, const FieldPtr& field) {
  if (!j.is_object() || !j.contains("n") || !j.contains("f"))
    fail(ErrorKind::SchemaError, "curve needs n and f");
  int n = j.at("n").get<int>();
  Polynomial f = parse_poly(j.at("f"), field);
  return make_curve(n, f);
}

FuncFieldElem parse_funcfield_value(const Json& j, const SuperellipticCurve& curve) {
  if (!j.is_array() || j.size() != static_cast<size_t>(curve.n))
    fail(ErrorKind::SchemaError, "value must list one component per power of y");
  std::vector<RationalFunction> comps;
  for (const auto& c : j) comps.push_back(parse_ratfun(c, curve.field()));
  return FuncFieldElem(curve, std::move(comps));
}

Json poly_to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (int i = 0; i <= p.degree(); ++i) {
    const FieldElement& c = p[i];
    if (c.is_rational()) {
      arr.push_back(rational_to_string(c.rational_value()));
    } else {
      Json v = Json::array();
      for (const auto& q : c.coords()) v.push_back(rational_to_string(q));
      arr.push_back(v);
    }
  }
  return arr;
}

Json ratfun_to_json(const RationalFunction& r) {
  return Json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

Polynomial lift_poly(const Polynomial& p, const FieldPtr& target) {
  std::vector<FieldElement> coeffs;
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p[i].lift_to(target));
  return Polynomial(std::move(coeffs));
}

RationalFunction lift_ratfun(const RationalFunction& r, const FieldPtr& target) {
  return RationalFunction(lift_poly(r.num(), target), lift_poly(r.den(), target));
}

}  // namespace belyi
