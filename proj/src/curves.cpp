#include "belyi/curves.hpp"

namespace belyi {

namespace {

FieldElement rat(const FieldPtr& k, long v) {
  return FieldElement::from_rational(k, Rational(v));
}

// j of Y^2 = X^3 + a2 X^2 + a4 X + a6 via the usual b/c invariants.
FieldElement j_of_cubic_coeffs(const FieldElement& a2, const FieldElement& a4,
                               const FieldElement& a6) {
  const FieldPtr k = a2.field();
  FieldElement b2 = rat(k, 4) * a2;
  FieldElement b4 = rat(k, 2) * a4;
  FieldElement b6 = rat(k, 4) * a6;
  FieldElement b8 = (b2 * b6 - b4 * b4) / rat(k, 4);
  FieldElement c4 = b2 * b2 - rat(k, 24) * b4;
  FieldElement disc = -(b2 * b2 * b8) - rat(k, 8) * b4.pow(3) -
                      rat(k, 27) * b6 * b6 + rat(k, 9) * b2 * b4 * b6;
  if (disc.is_zero()) fail(ErrorKind::SingularCurve, "singular cubic model");
  return c4.pow(3) / disc;
}

}  // namespace

Polynomial WeierstrassCurve::cubic() const {
  const FieldPtr k = b2.field();
  return Polynomial({b6, b4, b2, FieldElement::one(k)});
}

SuperellipticCurve WeierstrassCurve::as_superelliptic() const {
  return make_curve(2, cubic());
}

std::pair<WeierstrassCurve, CurveTransformation> quartic_to_weierstrass(
    const FieldElement& a, const FieldElement& b, const FieldElement& c,
    const FieldElement& d) {
  const FieldPtr k = a.field();
  const FieldElement one = FieldElement::one(k);
  Polynomial quartic({d, c, b, a, one});
  SuperellipticCurve source = make_curve(2, quartic);

  WeierstrassCurve w{b, a * c - rat(k, 4) * d, (a * a - rat(k, 4) * b) * d + c * c};
  SuperellipticCurve target = w.as_superelliptic();

  FuncFieldElem X = FuncFieldElem::x_coordinate(target);
  FuncFieldElem Y = FuncFieldElem::y_coordinate(target);
  auto cst = [&](const FieldElement& v) { return FuncFieldElem::constant(target, v); };
  FuncFieldElem denom = cst(rat(k, 4)) * X - cst(a * a - rat(k, 4) * b);
  FuncFieldElem x_expr = -(cst(rat(k, 2)) * Y + cst(a) * X + cst(rat(k, 2) * c)) / denom;
  FuncFieldElem Q = cst(a) * Y + cst(rat(k, 3)) * X * X + cst(rat(k, 2) * b) * X +
                    cst(a * c + rat(k, 4) * d);
  FuncFieldElem y_expr =
      (cst(rat(k, 8) * c) * Y - cst(rat(k, 4)) * X.pow(3) +
       cst(rat(k, 4) * (a * c - rat(k, 4) * d)) * X + cst(rat(k, 8) * c * c) +
       cst(a * a - rat(k, 4) * b) * Q) /
      (denom * denom);
  CurveTransformation t{source, target, x_expr, y_expr};
  return {w, t};
}

FieldElement j_invariant(const WeierstrassCurve& w) {
  return j_of_cubic_coeffs(w.b2, w.b4, w.b6);
}

FieldElement j_invariant(const SuperellipticCurve& curve) {
  if (curve.n != 2)
    fail(ErrorKind::InvalidInput, "j-invariant needs a double cover");
  const Polynomial& f = curve.f;
  const FieldPtr k = f.exemplar().field();
  const FieldElement zero = FieldElement::zero(k);
  if (f.degree() == 3) {
    FieldElement a3 = f[3], a2 = f.coeff_or_zero(2, zero), a1 = f.coeff_or_zero(1, zero),
                 a0 = f.coeff_or_zero(0, zero);
    // scale (x, y) -> (x/a3, y/a3^2): monic cubic with a2, a1*a3, a0*a3^2
    return j_of_cubic_coeffs(a2, a1 * a3, a0 * a3 * a3);
  }
  if (f.degree() == 4) {
    FieldElement e4 = f[4];
    if (e4.is_one()) {
      auto [w, t] = quartic_to_weierstrass(f[3], f.coeff_or_zero(2, zero),
                                           f.coeff_or_zero(1, zero),
                                           f.coeff_or_zero(0, zero));
      (void)t;
      return j_invariant(w);
    }
    // invariants of the binary quartic; the Jacobian cubic is X^3-27I X-27J
    FieldElement e3 = f[3], e2 = f.coeff_or_zero(2, zero), e1 = f.coeff_or_zero(1, zero),
                 e0 = f.coeff_or_zero(0, zero);
    FieldElement I = rat(k, 12) * e4 * e0 - rat(k, 3) * e3 * e1 + e2 * e2;
    FieldElement J = rat(k, 72) * e4 * e2 * e0 - rat(k, 27) * e4 * e1 * e1 -
                     rat(k, 27) * e3 * e3 * e0 + rat(k, 9) * e3 * e2 * e1 -
                     rat(k, 2) * e2.pow(3);
    return j_of_cubic_coeffs(FieldElement::zero(k), rat(k, -27) * I, rat(k, -27) * J);
  }
  fail(ErrorKind::InvalidInput, "j-invariant needs deg f in {3,4}");
}

BranchPoints cover_branch_points(const SuperellipticCurve& curve) {
  BranchPoints out;
  auto dec = squarefree_decompose(curve.f);
  for (const auto& p : dec.parts) {
    if (p.multiplicity != 1)
      fail(ErrorKind::SingularCurve, "curve polynomial is not squarefree");
    out.factors.push_back(p.factor);
  }
  out.at_infinity = (curve.f.degree() % curve.n) != 0;
  out.count = curve.f.degree() + (out.at_infinity ? 1 : 0);
  return out;
}

int cover_genus(const SuperellipticCurve& curve) {
  BranchPoints bp = cover_branch_points(curve);
  // 2g - 2 = -2n + B(n-1), full ramification at each branch point (n prime)
  int twog = 2 - 2 * curve.n + bp.count * (curve.n - 1);
  return twog / 2;
}

bool verify_transformation(const CurveTransformation& t) {
  FuncFieldElem lhs = t.y_expr.pow(t.source.n);
  FuncFieldElem rhs = eval_poly_at(t.source.f, t.x_expr);
  return (lhs - rhs).is_zero();
}

}  // namespace belyi
