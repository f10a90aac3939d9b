#ifndef BELYI_COMPOSER_HPP
#define BELYI_COMPOSER_HPP

#include "belyi/belyi0.hpp"
#include "belyi/curves.hpp"

namespace belyi {

enum class Provenance { CoverComposite, IsogenyComposite, Explicit };

struct Genus1BelyiMap {
  SuperellipticCurve curve;
  FuncFieldElem value;
  BranchingPassport passport;
  Provenance provenance = Provenance::Explicit;

  long degree() const { return passport.degree(); }
};

// Lift of a genus-0 Belyi map through the cyclic cover y^n = f: every branch
// point of the cover must sit in a fiber over {0,1,inf}; a point of
// ramification e lifts to one point of ramification n*e at branch points and
// to n points of ramification e elsewhere.
Genus1BelyiMap compose_with_cover(const Genus0BelyiMap& g0,
                                  const SuperellipticCurve& cover);

// Marked entries per fiber (multisets of entries of passport0).
struct PassportMarks {
  std::vector<int> over_inf, over_zero, over_one;
  int total() const {
    return static_cast<int>(over_inf.size() + over_zero.size() + over_one.size());
  }
};

BranchingPassport predict_passport(const BranchingPassport& passport0, int n,
                                   const PassportMarks& marks);

// The parametric degree-3 cover with prescribed quadratic branch fiber:
//   Psi2 = (Y + 3X + sqrt(B))/2  on  Y^2 = 16X^3/(A+2 sqrt(B)) + (3X+sqrt(B))^2.
// Construction verifies exactly that the critical values are {inf, 0} plus
// the roots of v^2 + A v + B.
struct Psi2Cover {
  SuperellipticCurve curve;
  FuncFieldElem map;  // y-linear
  FieldElement A, B_sqrt;
};

Psi2Cover make_psi2(const FieldElement& A, const FieldElement& B_sqrt);

// Exact fiber analysis for a y-linear function r0 + y*r1 (r1 != 0) on a
// degree-2 cover: returns the full passport over {inf, 0, 1} and certifies
// the Belyi property through the genus-1 Riemann-Hurwitz count.
struct Genus1Report {
  BranchingPassport passport;
  long degree = 0;
  long ramification_sum = 0;
  bool is_belyi = false;  // fiber sums agree and sum (e-1) = 2D
};

Genus1Report ylinear_analysis(const SuperellipticCurve& curve,
                              const FuncFieldElem& value);

// Verifies an explicitly given genus-1 map: y-free values are routed through
// the cover composition of their base rational function, y-linear values
// through the exact fiber analysis.
Genus1BelyiMap make_explicit_genus1(const SuperellipticCurve& curve,
                                    const FuncFieldElem& value);

}  // namespace belyi

#endif
