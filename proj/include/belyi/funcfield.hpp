#ifndef BELYI_FUNCFIELD_HPP
#define BELYI_FUNCFIELD_HPP

#include <vector>

#include "belyi/ratfun.hpp"

namespace belyi {

// y^n = f(x) with n in {2,3}; f squarefree for every catalog entry.
struct SuperellipticCurve {
  int n = 2;
  Polynomial f;

  FieldPtr field() const { return f.exemplar().field(); }
  bool operator==(const SuperellipticCurve& o) const { return n == o.n && f == o.f; }
  bool operator!=(const SuperellipticCurve& o) const { return !(*this == o); }
};

// Validates n and squarefreeness (gcd(f, f') = 1).
SuperellipticCurve make_curve(int n, Polynomial f);

// Element of the function field K(x)[y]/(y^n - f): sum_i y^i comps[i].
class FuncFieldElem {
public:
  FuncFieldElem(SuperellipticCurve curve, std::vector<RationalFunction> comps);
  static FuncFieldElem from_ratfun(const SuperellipticCurve& curve,
                                   const RationalFunction& r0);
  static FuncFieldElem constant(const SuperellipticCurve& curve, const FieldElement& c);
  static FuncFieldElem x_coordinate(const SuperellipticCurve& curve);
  static FuncFieldElem y_coordinate(const SuperellipticCurve& curve);

  const SuperellipticCurve& curve() const { return curve_; }
  const std::vector<RationalFunction>& comps() const { return comps_; }
  const RationalFunction& comp(int i) const { return comps_[static_cast<size_t>(i)]; }
  bool is_zero() const;
  bool is_y_free() const;

  FuncFieldElem operator-() const;
  FuncFieldElem operator+(const FuncFieldElem& o) const;
  FuncFieldElem operator-(const FuncFieldElem& o) const;
  FuncFieldElem operator*(const FuncFieldElem& o) const;
  FuncFieldElem operator/(const FuncFieldElem& o) const;
  FuncFieldElem inverse() const;
  FuncFieldElem pow(long e) const;

  bool operator==(const FuncFieldElem& o) const;
  bool operator!=(const FuncFieldElem& o) const { return !(*this == o); }

private:
  void check_same_curve(const FuncFieldElem& o) const;
  SuperellipticCurve curve_;
  std::vector<RationalFunction> comps_;  // size n
};

// p evaluated at w in the function field (Horner).
FuncFieldElem eval_poly_at(const Polynomial& p, const FuncFieldElem& w);

// outer(num/den) evaluated at w.
FuncFieldElem eval_ratfun_at(const RationalFunction& outer, const FuncFieldElem& w);

}  // namespace belyi

#endif
