#ifndef BELYI_POLY_HPP
#define BELYI_POLY_HPP

#include <utility>
#include <vector>

#include "belyi/errors.hpp"
#include "belyi/numberfield.hpp"

namespace belyi {

// Customization points for coefficient types (found by ADL).
inline FieldElement fe_zero(const FieldElement& exemplar) {
  return FieldElement::zero(exemplar.field());
}
inline FieldElement fe_one(const FieldElement& exemplar) {
  return FieldElement::one(exemplar.field());
}
inline bool fe_is_zero(const FieldElement& x) { return x.is_zero(); }

// Univariate polynomial over a field type F, coefficients ascending, trailing
// zeros stripped; the zero polynomial has no coefficients and degree -1.
template <class F>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { strip(); }
  static Poly zero() { return Poly(); }
  static Poly constant(const F& v) { return Poly(std::vector<F>{v}); }
  static Poly identity(const F& exemplar) {  // the polynomial "x"
    return Poly(std::vector<F>{fe_zero(exemplar), fe_one(exemplar)});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }
  const F& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const F& lc() const { return c_.back(); }
  F coeff_or_zero(int i, const F& exemplar) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return fe_zero(exemplar);
    return c_[static_cast<size_t>(i)];
  }
  const F& exemplar() const {
    if (c_.empty()) fail(ErrorKind::InvalidInput, "zero polynomial has no exemplar");
    return c_.front();
  }

  Poly operator-() const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(-v);
    return Poly(std::move(r));
  }

  Poly operator+(const Poly& o) const {
    const Poly& big = c_.size() >= o.c_.size() ? *this : o;
    const Poly& small = c_.size() >= o.c_.size() ? o : *this;
    std::vector<F> r = big.c_;
    for (size_t i = 0; i < small.c_.size(); ++i) r[i] = r[i] + small.c_[i];
    return Poly(std::move(r));
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<F> r(c_.size() + o.c_.size() - 1, fe_zero(c_.front()));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return Poly(std::move(r));
  }

  Poly scaled(const F& s) const {
    std::vector<F> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(v * s);
    return Poly(std::move(r));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(fe_one(c_.front()) / lc());
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> r;
    r.reserve(c_.size() - 1);
    F k = fe_zero(c_.front());
    const F one = fe_one(c_.front());
    for (size_t i = 1; i < c_.size(); ++i) {
      k = k + one;
      r.push_back(c_[i] * k);
    }
    return Poly(std::move(r));
  }

  // Multiply by x^k.
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<F> r(c_.size() + static_cast<size_t>(k), fe_zero(c_.front()));
    for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(k)] = c_[i];
    return Poly(std::move(r));
  }

  // Coefficients reversed, padded so that reverse(f)(x) = x^width f(1/x).
  Poly reversed(int width = -1) const {
    if (is_zero()) return *this;
    int w = width < 0 ? degree() : width;
    if (w < degree()) fail(ErrorKind::InvalidInput, "reverse width below degree");
    std::vector<F> r(static_cast<size_t>(w) + 1, fe_zero(c_.front()));
    for (size_t i = 0; i < c_.size(); ++i) r[static_cast<size_t>(w) - i] = c_[i];
    return Poly(std::move(r));
  }

  F eval(const F& x) const {
    if (is_zero()) return fe_zero(x);
    F acc = fe_zero(x);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

private:
  void strip() {
    while (!c_.empty() && fe_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.is_zero() || a.degree() < b.degree()) return {Poly<F>(), a};
  const F zero = fe_zero(b.lc());
  std::vector<F> rem(a.coeffs());
  std::vector<F> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, zero);
  const F lcinv = fe_one(b.lc()) / b.lc();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    F c = rem[static_cast<size_t>(k + b.degree())] * lcinv;
    quo[static_cast<size_t>(k)] = c;
    if (!fe_is_zero(c))
      for (int i = 0; i <= b.degree(); ++i)
        rem[static_cast<size_t>(k + i)] = rem[static_cast<size_t>(k + i)] - c * b[i];
  }
  rem.resize(static_cast<size_t>(b.degree() > 0 ? b.degree() : 0));
  return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) fail(ErrorKind::InvalidInput, "inexact polynomial division");
  return q;
}

// Monic gcd by remainder sequences.  gcd over Q is routed through an
// integer primitive-part sequence in poly.cpp to control growth.
Poly<FieldElement> poly_gcd(const Poly<FieldElement>& f, const Poly<FieldElement>& g);

template <class F>
Poly<F> poly_gcd_generic(Poly<F> f, Poly<F> g) {
  if (f.is_zero() && g.is_zero())
    fail(ErrorKind::InvalidInput, "gcd of two zero polynomials");
  while (!g.is_zero()) {
    auto [q, r] = divrem(f, g);
    (void)q;
    f = std::move(g);
    g = r.is_zero() ? Poly<F>() : r.monic();
  }
  return f.monic();
}

template <class F>
Poly<F> poly_gcd(const Poly<F>& f, const Poly<F>& g) {
  return poly_gcd_generic(f, g);
}

template <class F>
struct SquarefreePart {
  Poly<F> factor;  // monic squarefree
  int multiplicity = 0;
};

template <class F>
struct SquarefreeDecomposition {
  std::vector<SquarefreePart<F>> parts;  // pairwise coprime, increasing multiplicity
  F constant;                            // input = constant * prod factor^multiplicity

  Poly<F> reconstruct() const {
    Poly<F> acc = Poly<F>::constant(constant);
    for (const auto& p : parts)
      for (int i = 0; i < p.multiplicity; ++i) acc = acc * p.factor;
    return acc;
  }
};

// Yun's algorithm (characteristic zero).
template <class F>
SquarefreeDecomposition<F> squarefree_decompose(const Poly<F>& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidInput, "squarefree decomposition of zero");
  SquarefreeDecomposition<F> out;
  out.constant = f.lc();
  Poly<F> fm = f.monic();
  if (fm.degree() == 0) return out;
  Poly<F> df = fm.derivative();
  Poly<F> c = poly_gcd(fm, df);
  Poly<F> w = fm / c;
  Poly<F> y = df / c;
  Poly<F> z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    Poly<F> g = z.is_zero() ? w : poly_gcd(w, z);
    if (g.degree() > 0) out.parts.push_back({g, i});
    w = w / g;
    y = z / g;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

// Resultant over a field, classical recursion on remainders.
template <class F>
F resultant(Poly<F> f, Poly<F> g) {
  if (f.is_zero() || g.is_zero())
    fail(ErrorKind::InvalidInput, "resultant of zero polynomial");
  const F one = fe_one(f.lc());
  F acc = one;
  bool negate = false;
  while (true) {
    if (f.degree() < g.degree()) {
      if ((f.degree() % 2) && (g.degree() % 2)) negate = !negate;
      std::swap(f, g);
    }
    if (g.degree() == 0) {
      // res(f, c) = c^{deg f}
      F c = g.lc();
      F p = one;
      for (int i = 0; i < f.degree(); ++i) p = p * c;
      acc = acc * p;
      break;
    }
    auto [q, r] = divrem(f, g);
    (void)q;
    if (r.is_zero()) return fe_zero(one);  // common factor
    // res(f, g) = (-1)^{df dg} lc(g)^{df - dr} res(g, r)
    if ((f.degree() % 2) && (g.degree() % 2)) negate = !negate;
    F p = one;
    for (int i = 0; i < f.degree() - r.degree(); ++i) p = p * g.lc();
    acc = acc * p;
    f = std::move(g);
    g = std::move(r);
  }
  return negate ? -acc : acc;
}

// disc(f) = (-1)^{d(d-1)/2} res(f, f') / lc(f)
template <class F>
F discriminant(const Poly<F>& f) {
  if (f.is_zero() || f.degree() < 1)
    fail(ErrorKind::InvalidInput, "discriminant needs degree >= 1");
  F r = resultant(f, f.derivative());
  r = r / f.lc();
  int d = f.degree();
  if (((d * (d - 1)) / 2) % 2) r = -r;
  return r;
}

// --- truncated power-series helpers (used by the branch-order splitter) ---

template <class F>
Poly<F> mul_trunc(const Poly<F>& a, const Poly<F>& b, int k) {
  if (a.is_zero() || b.is_zero()) return Poly<F>();
  std::vector<F> r(static_cast<size_t>(k), fe_zero(a.lc()));
  for (int i = 0; i <= a.degree() && i < k; ++i)
    for (int j = 0; j <= b.degree() && i + j < k; ++j)
      r[static_cast<size_t>(i + j)] = r[static_cast<size_t>(i + j)] + a[i] * b[j];
  return Poly<F>(std::move(r));
}

// Inverse of a as a power series mod x^k; a(0) must be invertible.
template <class F>
Poly<F> inv_trunc(const Poly<F>& a, int k) {
  if (a.is_zero() || fe_is_zero(a[0]))
    fail(ErrorKind::DivisionByZero, "series inversion with zero constant term");
  const F one = fe_one(a[0]);
  Poly<F> inv = Poly<F>::constant(one / a[0]);
  int prec = 1;
  while (prec < k) {
    prec *= 2;
    int p = prec < k ? prec : k;
    // inv <- inv * (2 - a*inv) mod x^p
    Poly<F> t = mul_trunc(a, inv, p);
    Poly<F> two_minus = Poly<F>::constant(one + one) - t;
    inv = mul_trunc(inv, two_minus, p);
  }
  return inv;
}

}  // namespace belyi

#endif
