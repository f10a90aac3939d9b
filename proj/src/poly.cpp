#include "belyi/poly.hpp"

#include <algorithm>

#include "belyi/rational.hpp"

namespace belyi {

namespace {

// Integer-polynomial primitive remainder sequence for gcd over Q.

using ZPoly = std::vector<Integer>;  // ascending, stripped

void zstrip(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zcontent(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zprimitive(ZPoly& p) {
  Integer c = zcontent(p);
  if (c > 1)
    for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero), in place on a copy.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  const Integer& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db) {
    int k = static_cast<int>(a.size()) - 1 - db;
    Integer c = a.back();
    for (auto& v : a) v *= lb;
    for (int i = 0; i <= db; ++i)
      a[static_cast<size_t>(k + i)] -= c * b[static_cast<size_t>(i)];
    zstrip(a);
    zprimitive(a);
    if (a.empty()) break;
  }
  return a;
}

ZPoly to_zpoly(const Poly<FieldElement>& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) {
    Integer d = c.rational_value().get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational q = c.rational_value() * Rational(den);
    out.push_back(q.get_num());
  }
  zstrip(out);
  zprimitive(out);
  return out;
}

}  // namespace

Poly<FieldElement> poly_gcd(const Poly<FieldElement>& f, const Poly<FieldElement>& g) {
  if (f.is_zero() && g.is_zero())
    fail(ErrorKind::InvalidInput, "gcd of two zero polynomials");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (!f.exemplar().field()->same_field(*g.exemplar().field()))
    fail(ErrorKind::FieldMismatch, "gcd of polynomials over different fields");
  const FieldPtr field = f.exemplar().field();
  if (field->degree() > 1) return poly_gcd_generic(f, g);

  ZPoly a = to_zpoly(f), b = to_zpoly(g);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = zprem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<FieldElement> coeffs;
  coeffs.reserve(a.size());
  for (const auto& c : a)
    coeffs.push_back(FieldElement::from_rational(field, Rational(c)));
  return Poly<FieldElement>(std::move(coeffs)).monic();
}

}  // namespace belyi
