#ifndef BELYI_RATFUN_HPP
#define BELYI_RATFUN_HPP

#include <utility>

#include "belyi/poly.hpp"

namespace belyi {

// Reduced quotient of polynomials over a field type F; the denominator is
// monic and never empty, so every value carries a usable exemplar.
template <class F>
class RatFun {
public:
  RatFun() = default;
  RatFun(Poly<F> num, Poly<F> den) { assign(std::move(num), std::move(den)); }
  explicit RatFun(Poly<F> num)
      : RatFun(num, Poly<F>::constant(fe_one(num.exemplar()))) {}
  static RatFun zero_with(const F& exemplar) {
    return RatFun(Poly<F>(), Poly<F>::constant(fe_one(exemplar)));
  }
  static RatFun constant(const F& value) {
    return RatFun(Poly<F>::constant(value), Poly<F>::constant(fe_one(value)));
  }
  static RatFun identity(const F& exemplar) {
    return RatFun(Poly<F>::identity(exemplar), Poly<F>::constant(fe_one(exemplar)));
  }

  const Poly<F>& num() const { return num_; }
  const Poly<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Map degree: max of numerator and denominator degrees.
  int degree() const { return std::max(num_.degree(), den_.degree()); }
  F exemplar() const { return den_.lc(); }

  RatFun operator-() const { return RatFun(-num_, den_, no_reduce_tag{}); }
  RatFun operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFun operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  RatFun operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
  }
  RatFun operator/(const RatFun& o) const {
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "rational function division by zero");
    return RatFun(num_ * o.den_, den_ * o.num_);
  }
  RatFun inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return RatFun(den_, num_);
  }
  RatFun pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun acc = constant(fe_one(exemplar()));
    RatFun base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  RatFun derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  F eval(const F& x) const {
    F d = den_.eval(x);
    if (fe_is_zero(d)) fail(ErrorKind::DivisionByZero, "pole at evaluation point");
    return num_.eval(x) / d;
  }

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

private:
  struct no_reduce_tag {};
  RatFun(Poly<F> num, Poly<F> den, no_reduce_tag)
      : num_(std::move(num)), den_(std::move(den)) {}

  void assign(Poly<F> num, Poly<F> den) {
    if (den.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
    if (num.is_zero()) {
      num_ = Poly<F>();
      den_ = Poly<F>::constant(fe_one(den.exemplar()));
      return;
    }
    Poly<F> g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = num / g;
      den = den / g;
    }
    F lcinv = fe_one(den.lc()) / den.lc();
    num_ = num.scaled(lcinv);
    den_ = den.scaled(lcinv);
  }

  Poly<F> num_;
  Poly<F> den_ = Poly<F>();  // callers must use constructors; default is invalid
};

using RationalFunction = RatFun<FieldElement>;
using Polynomial = Poly<FieldElement>;

// Customization points so that Poly<RatFun<F>> works (bivariate layer).
template <class F>
RatFun<F> fe_zero(const RatFun<F>& exemplar) {
  return RatFun<F>::zero_with(exemplar.exemplar());
}
template <class F>
RatFun<F> fe_one(const RatFun<F>& exemplar) {
  return RatFun<F>::constant(fe_one(exemplar.exemplar()));
}
template <class F>
bool fe_is_zero(const RatFun<F>& x) {
  return x.is_zero();
}

// Evaluates a polynomial at a rational function (Horner over RatFun).
template <class F>
RatFun<F> eval_poly_at(const Poly<F>& p, const RatFun<F>& r) {
  RatFun<F> acc = RatFun<F>::zero_with(r.exemplar());
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * r + RatFun<F>::constant(p[i]);
  return acc;
}

// Composition outer(inner), reduced canonical form.
template <class F>
RatFun<F> ratfun_compose(const RatFun<F>& outer, const RatFun<F>& inner) {
  RatFun<F> dn = eval_poly_at(outer.den(), inner);
  if (dn.is_zero())
    fail(ErrorKind::DegenerateComposition,
         "denominator vanishes identically after substitution");
  RatFun<F> nm = eval_poly_at(outer.num(), inner);
  return nm / dn;
}

// r = c * S^n test by multiplicity divisibility; S is returned with monic
// numerator and denominator, the full constant in c.
template <class F>
struct ConstantPowerResult {
  bool is_power = false;
  F constant;
  RatFun<F> root;
};

template <class F>
ConstantPowerResult<F> constant_times_power(const RatFun<F>& r, int n) {
  if (r.is_zero()) fail(ErrorKind::InvalidInput, "zero rational function");
  ConstantPowerResult<F> out;
  auto dn = squarefree_decompose(r.num());
  auto dd = squarefree_decompose(r.den());
  for (const auto& p : dn.parts)
    if (p.multiplicity % n) return out;
  for (const auto& p : dd.parts)
    if (p.multiplicity % n) return out;
  const F one = fe_one(r.exemplar());
  Poly<F> snum = Poly<F>::constant(one);
  Poly<F> sden = Poly<F>::constant(one);
  for (const auto& p : dn.parts)
    for (int i = 0; i < p.multiplicity / n; ++i) snum = snum * p.factor;
  for (const auto& p : dd.parts)
    for (int i = 0; i < p.multiplicity / n; ++i) sden = sden * p.factor;
  out.is_power = true;
  out.root = RatFun<F>(snum, sden);
  // constant = r / root^n, computed on leading coefficients: root is monic
  // over monic, so c is the ratio of the decomposition constants.
  out.constant = dn.constant / dd.constant;
  return out;
}

// flag + c + S with r = c*S^2 exactly (n = 2 spelling used by the isogeny
// x-only check and the spec's is_constant_times_square).
template <class F>
ConstantPowerResult<F> is_constant_times_square(const RatFun<F>& r) {
  return constant_times_power(r, 2);
}

}  // namespace belyi

#endif
