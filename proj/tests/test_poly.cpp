#include <doctest.h>

#include <random>

#include "belyi/ratfun.hpp"

using namespace belyi;

namespace {

const FieldPtr Q = NumberField::rationals();

Polynomial poly(const FieldPtr& k, std::initializer_list<long> coeffs) {
  std::vector<FieldElement> v;
  for (long c : coeffs) v.push_back(FieldElement::from_rational(k, Rational(c)));
  return Polynomial(std::move(v));
}

FieldElement qnum(long n, long d = 1) {
  return FieldElement::from_rational(Q, Rational(n, d));
}

Polynomial random_monic(const FieldPtr& k, int deg, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::vector<FieldElement> v;
  for (int i = 0; i < deg; ++i)
    v.push_back(FieldElement::from_rational(k, Rational(coeff(rng))));
  v.push_back(FieldElement::one(k));
  return Polynomial(std::move(v));
}

}  // namespace

TEST_CASE("gcd basics") {
  Polynomial f = poly(Q, {-1, 0, 1});       // x^2-1
  Polynomial h = poly(Q, {-1, 0, 0, 1});    // x^3-1
  CHECK(poly_gcd(f, h) == poly(Q, {-1, 1}));

  Polynomial s = poly(Q, {1, 0, 0, 1});     // x^3+1
  Polynomial sq = s * s;
  CHECK(poly_gcd(sq, sq.derivative()) == s);
}

TEST_CASE("gcd over an extension field") {
  FieldPtr k = field_create({Rational(15), Rational(0), Rational(1)});
  FieldElement a = FieldElement::generator(k);  // a^2 = -15
  Polynomial f({FieldElement::from_rational(k, Rational(15)), FieldElement::zero(k),
                FieldElement::one(k)});        // x^2 + 15
  Polynomial l({-a, FieldElement::one(k)});    // x - a
  CHECK(poly_gcd(f, l) == l.monic());
}

TEST_CASE("squarefree decomposition") {
  Polynomial s = poly(Q, {1, 0, 0, 1});  // x^3+1
  auto d1 = squarefree_decompose(s * s);
  REQUIRE(d1.parts.size() == 1);
  CHECK(d1.parts[0].factor == s);
  CHECK(d1.parts[0].multiplicity == 2);
  CHECK(d1.constant.is_one());

  // numerator of phi5 - 1: (x-1)^3 (x^2+18x+1)
  Polynomial lin = poly(Q, {-1, 1});
  Polynomial quad = poly(Q, {1, 18, 1});
  auto d2 = squarefree_decompose(lin * lin * lin * quad);
  REQUIRE(d2.parts.size() == 2);
  CHECK(d2.parts[0].factor == quad);
  CHECK(d2.parts[0].multiplicity == 1);
  CHECK(d2.parts[1].factor == lin);
  CHECK(d2.parts[1].multiplicity == 3);

  auto d3 = squarefree_decompose(poly(Q, {0, 0, 0, 0, 0, 1}));  // x^5
  REQUIRE(d3.parts.size() == 1);
  CHECK(d3.parts[0].multiplicity == 5);

  CHECK_THROWS_AS(squarefree_decompose(Polynomial()), Error);
}

TEST_CASE("squarefree reconstruction of random planted products") {
  std::mt19937 rng(99);
  FieldPtr qi = field_create({Rational(1), Rational(0), Rational(1)}, "i");
  for (const FieldPtr& k : {Q, qi}) {
    for (int trial = 0; trial < 12; ++trial) {
      Polynomial g1 = random_monic(k, 2, rng);
      Polynomial g2 = random_monic(k, 1, rng);
      if (poly_gcd(g1, g2).degree() > 0 || poly_gcd(g1, g1.derivative()).degree() > 0)
        continue;
      Polynomial f = g1 * g2 * g2 * g2;
      auto dec = squarefree_decompose(f.scaled(FieldElement::from_rational(k, Rational(5))));
      CHECK(dec.reconstruct() == f.scaled(FieldElement::from_rational(k, Rational(5))));
      for (size_t i = 0; i < dec.parts.size(); ++i) {
        CHECK(poly_gcd(dec.parts[i].factor, dec.parts[i].factor.derivative())
                  .degree() == 0);
        for (size_t j = i + 1; j < dec.parts.size(); ++j)
          CHECK(poly_gcd(dec.parts[i].factor, dec.parts[j].factor).degree() == 0);
      }
    }
  }
}

TEST_CASE("resultants and discriminants") {
  CHECK(resultant(poly(Q, {-2, 1}), poly(Q, {1, 0, 1})) == qnum(5));
  CHECK(discriminant(poly(Q, {0, -1, 0, 1})) == qnum(4));    // x^3 - x
  CHECK(discriminant(poly(Q, {-3, 6, 1})) == qnum(48));      // x^2 + 6x - 3
  CHECK_THROWS_AS(resultant(Polynomial(), poly(Q, {1, 1})), Error);
}

TEST_CASE("resultant vanishes exactly on common factors") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial common = random_monic(Q, 1, rng);
    Polynomial f = random_monic(Q, 2, rng) * common;
    Polynomial h = random_monic(Q, 2, rng) * common;
    CHECK(resultant(f, h).is_zero());
    Polynomial h2 = h + Polynomial::constant(FieldElement::one(Q));
    bool coprime = poly_gcd(f, h2).degree() == 0;
    CHECK(resultant(f, h2).is_zero() == !coprime);
  }
}

TEST_CASE("rational function composition") {
  FieldElement one = FieldElement::one(Q);
  RationalFunction zsq(poly(Q, {0, 0, 1}));
  RationalFunction inner(poly(Q, {1, 0, 1}), poly(Q, {0, 2}));
  RationalFunction got = ratfun_compose(zsq, inner);
  RationalFunction want(poly(Q, {1, 0, 2, 0, 1}), poly(Q, {0, 0, 4}));
  CHECK(got == want);

  RationalFunction idm = RationalFunction::identity(one);
  CHECK(ratfun_compose(idm, inner) == inner);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    RationalFunction outer(random_monic(Q, 3, rng), random_monic(Q, 2, rng));
    RationalFunction inn(random_monic(Q, 2, rng), random_monic(Q, 1, rng));
    if (inn.is_constant()) continue;
    CHECK(ratfun_compose(outer, inn).degree() == outer.degree() * inn.degree());
  }
}

TEST_CASE("constant-times-square detection") {
  Polynomial n = poly(Q, {-1, 0, 1});
  Polynomial x2 = poly(Q, {0, 0, 1});
  RationalFunction r1(n * n, x2 * x2 * poly(Q, {4}));
  auto c1 = is_constant_times_square(r1);
  REQUIRE(c1.is_power);
  CHECK(c1.constant == qnum(1, 4));
  CHECK(c1.root == RationalFunction(n, x2));

  RationalFunction r2(n * n, x2 * x2 * poly(Q, {8}));
  auto c2 = is_constant_times_square(r2);
  REQUIRE(c2.is_power);
  CHECK(c2.constant == qnum(1, 8));
  CHECK(c2.root == RationalFunction(n, x2));

  RationalFunction r3(poly(Q, {0, 0, 0, 1}), poly(Q, {-1, 1}));
  CHECK_FALSE(is_constant_times_square(r3).is_power);
}
