#include <doctest.h>

#include <random>

#include "belyi/isogeny.hpp"

using namespace belyi;

namespace {

const FieldPtr Q = NumberField::rationals();

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<FieldElement> v;
  for (long c : coeffs) v.push_back(FieldElement::from_rational(Q, Rational(c)));
  return Polynomial(std::move(v));
}

FieldElement qn(long n, long d = 1) {
  return FieldElement::from_rational(Q, Rational(n, d));
}

BranchingPassport pp(const char* s) { return BranchingPassport::parse(s); }

IsogenyMap iso_deg2_to_j0() {
  // u = (x-1)(x+3)/(4x), R = (x^2+3)/(8x^2), from y^2=x(x^2+6x-3) to Y^2=X^3+1
  IsogenyMap iso;
  iso.source = make_curve(2, poly({0, -3, 6, 1}));
  iso.target = make_curve(2, poly({1, 0, 0, 1}));
  iso.u = RationalFunction(poly({-1, 1}) * poly({3, 1}), poly({0, 4}));
  iso.R = RationalFunction(poly({3, 0, 1}), poly({0, 0, 8}));
  iso.degree = 2;
  return iso;
}

}  // namespace

TEST_CASE("full isogeny verification") {
  IsogenyReport r = verify_isogeny_full(iso_deg2_to_j0());
  CHECK(r.all_passed());

  // multiplication-by-2 on the hexagonal cubic cover (n = 3)
  IsogenyMap m2;
  m2.source = make_curve(3, poly({0, -1, 1}));
  m2.target = make_curve(3, poly({0, -1, 1}));
  Polynomial z = poly({0, 1});
  Polynomial zm2 = poly({-2, 1});
  Polynomial d = poly({-1, 2});
  m2.u = RationalFunction(-(z * zm2 * zm2 * zm2), d * d * d);
  m2.R = RationalFunction(zm2 * poly({1, 1}), d * d);
  m2.degree = 4;
  CHECK(verify_isogeny_full(m2).all_passed());

  // wrong degree is reported
  m2.degree = 3;
  CHECK_FALSE(verify_isogeny_full(m2).all_passed());
}

TEST_CASE("degree-5 endomorphism over the Gaussian field") {
  FieldPtr k = field_create({Rational(1), Rational(0), Rational(1)}, "i");
  FieldElement i = FieldElement::generator(k);
  FieldElement one = FieldElement::one(k);
  Polynomial X({FieldElement::zero(k), one});
  Polynomial e1 = X * X * X - X;
  IsogenyMap iso;
  iso.source = make_curve(2, e1);
  iso.target = make_curve(2, e1);
  Polynomial a = X * X - Polynomial::constant(one + i + i);
  Polynomial b = Polynomial::constant(one + i + i) * X * X - Polynomial::constant(one);
  iso.u = RationalFunction(X * a * a, b * b);
  Polynomial c4 = X * X * X * X +
                  Polynomial::constant(FieldElement::from_rational(k, Rational(2)) +
                                       FieldElement::from_rational(k, Rational(8)) * i) *
                      X * X +
                  Polynomial::constant(one);
  iso.R = RationalFunction(a * c4, b * b * b);
  iso.degree = 5;
  CHECK(verify_isogeny_full(iso).all_passed());
}

TEST_CASE("x-only verification recovers the constant") {
  // the three degree-2 isogenies onto y^2=(x+1)(x-1)(x-2)
  Polynomial tgt = poly({2, -1, -2, 1});
  for (auto src_u : {std::pair{poly({0, 4, -8, 1}), poly({4, 0, 1})},
                     std::pair{poly({0, 1, 10, 1}), poly({1, 6, 1})},
                     std::pair{poly({0, 9, -2, 1}), poly({9, 2, 1})}}) {
    XOnlyResult xr = verify_isogeny_xonly(src_u.first, tgt,
                                          RationalFunction(src_u.second, poly({0, 4})), 2);
    REQUIRE(xr.ok);
    CHECK(xr.c == qn(1, 64));
    CHECK(xr.c_is_nth_power);
    REQUIRE(xr.c_root.has_value());
    CHECK(*xr.c_root * *xr.c_root == xr.c);
  }

  // u = (x^2+1)/(2x) from y^2=x^3+x to Y^2=X^3-X: c = 1/8 is not a square in Q
  XOnlyResult x7 = verify_isogeny_xonly(poly({0, 1, 0, 1}), poly({0, -1, 0, 1}),
                                        RationalFunction(poly({1, 0, 1}), poly({0, 2})), 2);
  REQUIRE(x7.ok);
  CHECK(x7.c == qn(1, 8));
  CHECK_FALSE(x7.c_is_nth_power);

  // the same quotient over Q(sqrt 2) has the square root s/4
  FieldPtr k2 = field_create({Rational(-2), Rational(0), Rational(1)}, "s");
  Polynomial f2({FieldElement::zero(k2), FieldElement::one(k2), FieldElement::zero(k2),
                 FieldElement::one(k2)});
  Polynomial g2({FieldElement::zero(k2), -FieldElement::one(k2), FieldElement::zero(k2),
                 FieldElement::one(k2)});
  RationalFunction u2(Polynomial({FieldElement::one(k2), FieldElement::zero(k2),
                                  FieldElement::one(k2)}),
                      Polynomial({FieldElement::zero(k2),
                                  FieldElement::from_rational(k2, Rational(2))}));
  XOnlyResult x7k = verify_isogeny_xonly(f2, g2, u2, 2);
  REQUIRE(x7k.ok);
  CHECK(x7k.c_is_nth_power);
  REQUIRE(x7k.c_root.has_value());
  CHECK(*x7k.c_root * *x7k.c_root == x7k.c);

  // identity map
  XOnlyResult xid = verify_isogeny_xonly(poly({0, -1, 0, 1}), poly({0, -1, 0, 1}),
                                         RationalFunction::identity(qn(1)), 2);
  REQUIRE(xid.ok);
  CHECK(xid.c == qn(1));
  CHECK(xid.R == RationalFunction::constant(qn(1)));
}

TEST_CASE("the 2-descent pattern at random parameters") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> co(-9, 9);
  int done = 0;
  while (done < 10) {
    long a = co(rng), b = co(rng);
    Polynomial quartic({qn(b), qn(0), qn(a), qn(0), qn(1)});        // X^4+aX^2+b
    Polynomial cubic = poly({0, 1}) * Polynomial({qn(b), qn(a), qn(1)});  // x(x^2+ax+b)
    if (poly_gcd(quartic, quartic.derivative()).degree() > 0) continue;
    if (poly_gcd(cubic, cubic.derivative()).degree() > 0) continue;
    RationalFunction u(poly({0, 0, 1}));
    XOnlyResult xr = verify_isogeny_xonly(quartic, cubic, u, 2);
    REQUIRE(xr.ok);
    CHECK(xr.c == qn(1));
    CHECK(xr.R == RationalFunction(poly({0, 1})));
    // Weierstrass reduction of the quartic is X(X^2-2aX+a^2-4b)
    Polynomial w = poly({0, 1}) * Polynomial({qn(a * a - 4 * b), qn(-2 * a), qn(1)});
    if (poly_gcd(w, w.derivative()).degree() > 0) continue;
    CHECK(j_invariant(make_curve(2, quartic)) == j_invariant(make_curve(2, w)));
    ++done;
  }
}

TEST_CASE("composition with an isogeny repeats the passport") {
  // Phi0 = (1+Y)/2 on Y^2=X^3+1 composed with the degree-2 isogeny
  SuperellipticCurve e = make_curve(2, poly({1, 0, 0, 1}));
  RationalFunction half = RationalFunction::constant(qn(1, 2));
  FuncFieldElem phi0(e, {half, half});
  Genus1BelyiMap base{e, phi0, pp("3/3/3"), Provenance::Explicit};
  Genus1BelyiMap m = compose_isogeny(base, iso_deg2_to_j0());
  CHECK(m.passport == pp("3^2/3^2/3^2"));
  // value is 1/2 + y (x^2+3)/(16 x^2)
  RationalFunction expect(poly({3, 0, 1}), poly({0, 0, 16}));
  CHECK(m.value.comp(0) == half);
  CHECK(m.value.comp(1) == expect);

  // curve mismatch
  Genus1BelyiMap wrong{iso_deg2_to_j0().source, phi0, pp("3/3/3"), Provenance::Explicit};
  CHECK_THROWS_AS(compose_isogeny(wrong, iso_deg2_to_j0()), Error);
}

TEST_CASE("the CM twist interchanges the square-lattice map and its complement") {
  FieldPtr k = field_create({Rational(1), Rational(0), Rational(1)}, "i");
  FieldElement i = FieldElement::generator(k);
  FieldElement one = FieldElement::one(k);
  Polynomial X({FieldElement::zero(k), one});
  Polynomial n = (X * X + Polynomial::constant(one));
  RationalFunction psi1(n * n,
                        Polynomial::constant(FieldElement::from_rational(k, Rational(4))) *
                            X * X);
  RationalFunction minus_ix(Polynomial({FieldElement::zero(k), -i}));
  RationalFunction lhs = ratfun_compose(psi1, minus_ix);
  RationalFunction rhs = RationalFunction::constant(one) - psi1;
  CHECK(lhs == rhs);
}
