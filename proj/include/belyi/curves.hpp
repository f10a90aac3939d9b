#ifndef BELYI_CURVES_HPP
#define BELYI_CURVES_HPP

#include <optional>

#include "belyi/funcfield.hpp"

namespace belyi {

// Y^2 = X^3 + b2 X^2 + b4 X + b6.
struct WeierstrassCurve {
  FieldElement b2, b4, b6;

  Polynomial cubic() const;  // X^3 + b2 X^2 + b4 X + b6
  SuperellipticCurve as_superelliptic() const;
};

// Substitution expressions (on the target curve) that carry the target's
// points onto the source curve.
struct CurveTransformation {
  SuperellipticCurve source;
  SuperellipticCurve target;
  FuncFieldElem x_expr;  // source x as a function on the target
  FuncFieldElem y_expr;  // source y as a function on the target
};

// y^2 = x^4+ax^3+bx^2+cx+d  ->  Y^2 = X^3+bX^2+(ac-4d)X+(a^2-4b)d+c^2,
// together with the explicit substitution; the pair always passes
// verify_transformation.
std::pair<WeierstrassCurve, CurveTransformation> quartic_to_weierstrass(
    const FieldElement& a, const FieldElement& b, const FieldElement& c,
    const FieldElement& d);

FieldElement j_invariant(const WeierstrassCurve& w);
// n = 2, deg f in {3,4}; non-monic quartics go through the invariants of the
// binary quartic.
FieldElement j_invariant(const SuperellipticCurve& curve);

struct BranchPoints {
  std::vector<Polynomial> factors;  // monic squarefree pieces of f
  bool at_infinity = false;         // n does not divide deg f
  int count = 0;                    // total number of branch points
};

BranchPoints cover_branch_points(const SuperellipticCurve& curve);
int cover_genus(const SuperellipticCurve& curve);

// True iff substituting (x_expr, y_expr) into the source equation yields zero
// identically modulo the target curve relation.
bool verify_transformation(const CurveTransformation& t);

}  // namespace belyi

#endif
