#ifndef BELYI_NUMBERFIELD_HPP
#define BELYI_NUMBERFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "belyi/rational.hpp"

namespace belyi {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// A number field Q(alpha) presented as Q[t]/(m(t)) with m monic.  Degree 1
// encodes Q itself.  Irreducibility of m is trusted, not re-proved: a
// reducible minimal polynomial surfaces as DivisionByZero ("field file
// invalid") the first time a zero divisor gets inverted.
class NumberField {
public:
  static FieldPtr create(std::vector<Rational> minpoly,
                         std::string generator_name = "a");
  static FieldPtr rationals();

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::vector<Rational>& minpoly() const { return minpoly_; }
  const std::string& generator_name() const { return generator_name_; }
  bool is_rational_field() const { return degree() == 1; }
  bool same_field(const NumberField& other) const;

private:
  NumberField(std::vector<Rational> minpoly, std::string generator_name)
      : minpoly_(std::move(minpoly)), generator_name_(std::move(generator_name)) {}

  std::vector<Rational> minpoly_;  // ascending, monic
  std::string generator_name_;
};

// Element of a number field, coordinates in the power basis 1, a, ..., a^{d-1}.
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  static FieldElement zero(const FieldPtr& field);
  static FieldElement one(const FieldPtr& field);
  static FieldElement from_rational(const FieldPtr& field, const Rational& q);
  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;        // all coordinates above 1 vanish
  Rational rational_value() const; // requires is_rational()

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  // Re-expresses a rational-valued element in another field; lifting a
  // proper extension element is FieldMismatch.
  FieldElement lift_to(const FieldPtr& target) const;

  std::string to_string() const;

private:
  void check_same_field(const FieldElement& o) const;

  FieldPtr field_;
  std::vector<Rational> coords_;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement elem_arith(ArithOp op, const FieldElement& a, const FieldElement& b);

FieldPtr field_create(std::vector<Rational> minpoly, std::string generator_name = "a");

}  // namespace belyi

#endif
