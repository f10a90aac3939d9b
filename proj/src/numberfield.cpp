#include "belyi/numberfield.hpp"

#include <sstream>

#include "belyi/errors.hpp"

namespace belyi {

namespace {

// Small helpers on rational coordinate vectors viewed as polynomials in the
// field generator (ascending, not stripped).

int vdeg(const std::vector<Rational>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (v[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

void vreduce_mod(std::vector<Rational>& v, const std::vector<Rational>& m) {
  // m monic of degree d; reduce v in place below degree d.
  int d = static_cast<int>(m.size()) - 1;
  for (int k = vdeg(v); k >= d; k = vdeg(v)) {
    Rational c = v[static_cast<size_t>(k)];
    for (int i = 0; i <= d; ++i)
      v[static_cast<size_t>(k - d + i)] -= c * m[static_cast<size_t>(i)];
  }
}

std::vector<Rational> vmul(const std::vector<Rational>& a,
                           const std::vector<Rational>& b) {
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Extended gcd of u and the (monic) minimal polynomial m: returns s with
// s*u = gcd (mod m).  The caller checks that gcd is a nonzero constant.
struct ExtGcd {
  std::vector<Rational> gcd;
  std::vector<Rational> cofactor;  // of u
};

ExtGcd vextgcd(std::vector<Rational> u, std::vector<Rational> m) {
  std::vector<Rational> s0{Rational(1)}, s1;  // coefficients on u
  std::vector<Rational> r0 = std::move(u), r1 = std::move(m);
  auto normalize = [](std::vector<Rational>& v) {
    v.resize(static_cast<size_t>(vdeg(v) + 1));
  };
  normalize(r0);
  normalize(r1);
  while (!r1.empty()) {
    // divide r0 by r1
    std::vector<Rational> q(static_cast<size_t>(
        std::max(0, static_cast<int>(r0.size()) - static_cast<int>(r1.size()) + 1)));
    std::vector<Rational> rem = r0;
    int db = static_cast<int>(r1.size()) - 1;
    Rational lb = r1.back();
    for (int k = static_cast<int>(rem.size()) - 1 - db; k >= 0; --k) {
      Rational c = rem[static_cast<size_t>(k + db)] / lb;
      q[static_cast<size_t>(k)] = c;
      if (c != 0)
        for (int i = 0; i <= db; ++i)
          rem[static_cast<size_t>(k + i)] -= c * r1[static_cast<size_t>(i)];
    }
    rem.resize(static_cast<size_t>(std::max(vdeg(rem) + 1, 0)));
    // s_next = s0 - q*s1
    std::vector<Rational> s_next = s0;
    if (!s1.empty() && !q.empty()) {
      std::vector<Rational> qs = vmul(q, s1);
      if (s_next.size() < qs.size()) s_next.resize(qs.size(), Rational(0));
      for (size_t i = 0; i < qs.size(); ++i) s_next[i] -= qs[i];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_next);
  }
  return {std::move(r0), std::move(s0)};
}

}  // namespace

FieldPtr NumberField::create(std::vector<Rational> minpoly, std::string name) {
  if (minpoly.size() < 2)
    fail(ErrorKind::InvalidField, "minimal polynomial must have degree >= 1");
  if (minpoly.back() != 1)
    fail(ErrorKind::InvalidField, "minimal polynomial must be monic");
  return FieldPtr(new NumberField(std::move(minpoly), std::move(name)));
}

FieldPtr NumberField::rationals() {
  static FieldPtr q = create({Rational(0), Rational(1)}, "t");
  return q;
}

bool NumberField::same_field(const NumberField& other) const {
  return minpoly_ == other.minpoly_;
}

FieldPtr field_create(std::vector<Rational> minpoly, std::string generator_name) {
  return NumberField::create(std::move(minpoly), std::move(generator_name));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) fail(ErrorKind::InvalidField, "element without field");
  for (auto& c : coords_) c.canonicalize();
  size_t d = static_cast<size_t>(field_->degree());
  if (coords_.size() > d) {
    vreduce_mod(coords_, field_->minpoly());
    coords_.resize(d, Rational(0));
  } else {
    coords_.resize(d, Rational(0));
  }
}

FieldElement FieldElement::zero(const FieldPtr& field) {
  return FieldElement(field, {});
}

FieldElement FieldElement::one(const FieldPtr& field) {
  return FieldElement(field, {Rational(1)});
}

FieldElement FieldElement::from_rational(const FieldPtr& field, const Rational& q) {
  return FieldElement(field, {q});
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  if (field->degree() < 2)
    return FieldElement::zero(field);  // generator of Q is 0 (root of t)
  return FieldElement(field, {Rational(0), Rational(1)});
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const {
  if (coords_.empty() || coords_[0] != 1) return false;
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational())
    fail(ErrorKind::InvalidInput, "element is not rational");
  return coords_.empty() ? Rational(0) : coords_[0];
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!field_ || !o.field_ || !field_->same_field(*o.field_))
    fail(ErrorKind::FieldMismatch, "elements of different fields");
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> r = coords_;
  for (auto& c : r) c = -c;
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  std::vector<Rational> r = coords_;
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.coords_[i];
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  std::vector<Rational> r = coords_;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= o.coords_[i];
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  if (coords_.empty() || o.coords_.empty()) return zero(field_);
  std::vector<Rational> r = vmul(coords_, o.coords_);
  vreduce_mod(r, field_->minpoly());
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  std::vector<Rational> u = coords_;
  u.resize(static_cast<size_t>(vdeg(u) + 1));
  ExtGcd eg = vextgcd(u, field_->minpoly());
  if (vdeg(eg.gcd) != 0)
    fail(ErrorKind::DivisionByZero,
         "zero divisor: field file invalid (reducible minimal polynomial)");
  Rational g = eg.gcd[0];
  std::vector<Rational> inv = eg.cofactor;
  for (auto& c : inv) c /= g;
  vreduce_mod(inv, field_->minpoly());
  return FieldElement(field_, std::move(inv));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement acc = one(field_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (!field_ || !o.field_) return false;
  if (!field_->same_field(*o.field_)) return false;
  return coords_ == o.coords_;
}

FieldElement FieldElement::lift_to(const FieldPtr& target) const {
  if (field_ && target->same_field(*field_)) return FieldElement(target, coords_);
  if (!is_rational())
    fail(ErrorKind::FieldMismatch, "cannot lift a non-rational element");
  return FieldElement::from_rational(target, rational_value());
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  bool printed = false;
  const std::string& g = field_->generator_name();
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (printed) os << " + ";
    os << rational_to_string(coords_[i]);
    if (i == 1) os << "*" << g;
    if (i > 1) os << "*" << g << "^" << i;
    printed = true;
  }
  if (!printed) os << "0";
  return os.str();
}

FieldElement elem_arith(ArithOp op, const FieldElement& a, const FieldElement& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  fail(ErrorKind::InvalidInput, "unknown arithmetic op");
}

}  // namespace belyi
