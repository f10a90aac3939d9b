#include "belyi/funcfield.hpp"

namespace belyi {

SuperellipticCurve make_curve(int n, Polynomial f) {
  if (n != 2 && n != 3)
    fail(ErrorKind::InvalidInput, "superelliptic exponent must be 2 or 3");
  if (f.is_zero() || f.degree() < 1)
    fail(ErrorKind::InvalidInput, "curve polynomial must be non-constant");
  Polynomial g = poly_gcd(f, f.derivative());
  if (g.degree() > 0)
    fail(ErrorKind::SingularCurve, "curve polynomial is not squarefree");
  return SuperellipticCurve{n, std::move(f)};
}

FuncFieldElem::FuncFieldElem(SuperellipticCurve curve,
                             std::vector<RationalFunction> comps)
    : curve_(std::move(curve)), comps_(std::move(comps)) {
  if (comps_.size() != static_cast<size_t>(curve_.n))
    fail(ErrorKind::InvalidInput, "component count must equal the cover degree");
}

FuncFieldElem FuncFieldElem::from_ratfun(const SuperellipticCurve& curve,
                                         const RationalFunction& r0) {
  std::vector<RationalFunction> comps(
      static_cast<size_t>(curve.n),
      RationalFunction::zero_with(r0.exemplar()));
  comps[0] = r0;
  return FuncFieldElem(curve, std::move(comps));
}

FuncFieldElem FuncFieldElem::constant(const SuperellipticCurve& curve,
                                      const FieldElement& c) {
  return from_ratfun(curve, RationalFunction::constant(c));
}

FuncFieldElem FuncFieldElem::x_coordinate(const SuperellipticCurve& curve) {
  return from_ratfun(curve, RationalFunction::identity(curve.f.exemplar()));
}

FuncFieldElem FuncFieldElem::y_coordinate(const SuperellipticCurve& curve) {
  const FieldElement one = fe_one(curve.f.exemplar());
  std::vector<RationalFunction> comps(static_cast<size_t>(curve.n),
                                      RationalFunction::zero_with(one));
  comps[1] = RationalFunction::constant(one);
  return FuncFieldElem(curve, std::move(comps));
}

bool FuncFieldElem::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

bool FuncFieldElem::is_y_free() const {
  for (size_t i = 1; i < comps_.size(); ++i)
    if (!comps_[i].is_zero()) return false;
  return true;
}

void FuncFieldElem::check_same_curve(const FuncFieldElem& o) const {
  if (curve_ != o.curve_)
    fail(ErrorKind::CurveMismatch, "function-field elements on different curves");
}

FuncFieldElem FuncFieldElem::operator-() const {
  std::vector<RationalFunction> r;
  r.reserve(comps_.size());
  for (const auto& c : comps_) r.push_back(-c);
  return FuncFieldElem(curve_, std::move(r));
}

FuncFieldElem FuncFieldElem::operator+(const FuncFieldElem& o) const {
  check_same_curve(o);
  std::vector<RationalFunction> r;
  r.reserve(comps_.size());
  for (size_t i = 0; i < comps_.size(); ++i) r.push_back(comps_[i] + o.comps_[i]);
  return FuncFieldElem(curve_, std::move(r));
}

FuncFieldElem FuncFieldElem::operator-(const FuncFieldElem& o) const {
  check_same_curve(o);
  std::vector<RationalFunction> r;
  r.reserve(comps_.size());
  for (size_t i = 0; i < comps_.size(); ++i) r.push_back(comps_[i] - o.comps_[i]);
  return FuncFieldElem(curve_, std::move(r));
}

FuncFieldElem FuncFieldElem::operator*(const FuncFieldElem& o) const {
  check_same_curve(o);
  const int n = curve_.n;
  RationalFunction fr(curve_.f);
  RationalFunction zero = RationalFunction::zero_with(curve_.f.exemplar());
  std::vector<RationalFunction> prod(static_cast<size_t>(2 * n - 1), zero);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      prod[static_cast<size_t>(i + j)] =
          prod[static_cast<size_t>(i + j)] + comps_[static_cast<size_t>(i)] * o.comps_[static_cast<size_t>(j)];
  // reduce y^(n+k) = f * y^k
  std::vector<RationalFunction> out(prod.begin(), prod.begin() + n);
  for (int k = n; k < 2 * n - 1; ++k)
    out[static_cast<size_t>(k - n)] =
        out[static_cast<size_t>(k - n)] + prod[static_cast<size_t>(k)] * fr;
  return FuncFieldElem(curve_, std::move(out));
}

FuncFieldElem FuncFieldElem::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero function");
  // Extended Euclid in K(x)[Y] modulo Y^n - f.
  using YPoly = Poly<RationalFunction>;
  const RationalFunction one = RationalFunction::constant(fe_one(curve_.f.exemplar()));
  const RationalFunction zero = RationalFunction::zero_with(curve_.f.exemplar());
  std::vector<RationalFunction> mod(static_cast<size_t>(curve_.n) + 1, zero);
  mod[0] = -RationalFunction(curve_.f);
  mod[static_cast<size_t>(curve_.n)] = one;
  YPoly r0{std::vector<RationalFunction>(mod)};
  YPoly r1{std::vector<RationalFunction>(comps_)};
  YPoly s0 = YPoly::zero();          // coefficient of this on r0
  YPoly s1 = YPoly::constant(one);   // coefficient of this on r1
  while (!r1.is_zero() && r1.degree() > 0) {
    auto [q, r] = divrem(r0, r1);
    YPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.is_zero())
    fail(ErrorKind::DivisionByZero, "non-invertible function (degenerate curve)");
  // r1 is a nonzero constant c = s1 * this (mod Y^n - f): inverse = s1 / c.
  RationalFunction c = r1[0];
  std::vector<RationalFunction> inv(static_cast<size_t>(curve_.n), zero);
  for (int i = 0; i <= s1.degree() && i < curve_.n; ++i) inv[static_cast<size_t>(i)] = s1[i] / c;
  return FuncFieldElem(curve_, std::move(inv));
}

FuncFieldElem FuncFieldElem::operator/(const FuncFieldElem& o) const {
  return *this * o.inverse();
}

FuncFieldElem FuncFieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FuncFieldElem acc = constant(curve_, fe_one(curve_.f.exemplar()));
  FuncFieldElem base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool FuncFieldElem::operator==(const FuncFieldElem& o) const {
  if (curve_ != o.curve_) return false;
  return comps_ == o.comps_;
}

FuncFieldElem eval_poly_at(const Polynomial& p, const FuncFieldElem& w) {
  FuncFieldElem acc =
      FuncFieldElem::constant(w.curve(), fe_zero(w.curve().f.exemplar()));
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * w + FuncFieldElem::constant(w.curve(), p[i]);
  }
  return acc;
}

FuncFieldElem eval_ratfun_at(const RationalFunction& outer, const FuncFieldElem& w) {
  FuncFieldElem dn = eval_poly_at(outer.den(), w);
  if (dn.is_zero())
    fail(ErrorKind::DegenerateComposition,
         "denominator vanishes identically after substitution");
  FuncFieldElem nm = eval_poly_at(outer.num(), w);
  return nm / dn;
}

}  // namespace belyi
