#include "belyi/composer.hpp"

#include <algorithm>
#include <map>

namespace belyi {

namespace {

FieldElement rat(const FieldPtr& k, long v) {
  return FieldElement::from_rational(k, Rational(v));
}

// ----- cover composition -----

struct LiftedFiber {
  std::vector<int> entries;
  int marked_roots = 0;
};

LiftedFiber lift_fiber(const FiberDecomposition& fiber, const Polynomial& f_monic,
                       int n, bool mark_infinity) {
  LiftedFiber out;
  for (const auto& piece : fiber.pieces) {
    Polynomial h = poly_gcd(piece.factor, f_monic);
    int marked = h.degree() > 0 ? h.degree() : 0;
    out.marked_roots += marked;
    for (int i = 0; i < marked; ++i) out.entries.push_back(n * piece.multiplicity);
    int unmarked = piece.factor.degree() - marked;
    for (int i = 0; i < unmarked * n; ++i) out.entries.push_back(piece.multiplicity);
  }
  if (fiber.inf_multiplicity > 0) {
    if (mark_infinity) {
      out.entries.push_back(n * fiber.inf_multiplicity);
    } else {
      for (int i = 0; i < n; ++i) out.entries.push_back(fiber.inf_multiplicity);
    }
  }
  std::sort(out.entries.rbegin(), out.entries.rend());
  return out;
}

}  // namespace

Genus1BelyiMap compose_with_cover(const Genus0BelyiMap& g0,
                                  const SuperellipticCurve& cover) {
  if (cover_genus(cover) != 1)
    fail(ErrorKind::WrongGenus, "cover has genus " + std::to_string(cover_genus(cover)));
  const int n = cover.n;
  const Polynomial f_monic = cover.f.monic();
  const bool inf_branch = (cover.f.degree() % n) != 0;

  FiberDecomposition fibers[3] = {fiber_pieces(g0.map, FiberValue::Inf),
                                  fiber_pieces(g0.map, FiberValue::Zero),
                                  fiber_pieces(g0.map, FiberValue::One)};
  // the infinite branch point must land in the unique fiber containing the
  // point at infinity
  int inf_home = -1;
  for (int i = 0; i < 3; ++i)
    if (fibers[i].inf_multiplicity > 0) inf_home = i;
  if (inf_branch && inf_home < 0)
    fail(ErrorKind::NotBelyi,
         "cover branches at infinity but the map sends infinity outside {0,1,inf}");

  LiftedFiber lifted[3];
  int marked_total = 0;
  for (int i = 0; i < 3; ++i) {
    lifted[i] = lift_fiber(fibers[i], f_monic, n, inf_branch && i == inf_home);
    marked_total += lifted[i].marked_roots;
  }
  if (marked_total != cover.f.degree())
    fail(ErrorKind::NotBelyi,
         "cover branch points do not all lie in the fibers over {0,1,inf}");

  BranchingPassport p;
  p.over_inf = lifted[0].entries;
  p.over_zero = lifted[1].entries;
  p.over_one = lifted[2].entries;
  long D = static_cast<long>(n) * g0.map.degree();
  if (!p.fiber_sums_match() || p.degree() != D ||
      p.ramification_sum() != 2 * D)
    fail(ErrorKind::NotBelyi, "composite fails the genus-1 Riemann-Hurwitz count");

  FuncFieldElem value = FuncFieldElem::from_ratfun(
      cover, g0.map);
  return Genus1BelyiMap{cover, value, p, Provenance::CoverComposite};
}

BranchingPassport predict_passport(const BranchingPassport& passport0, int n,
                                   const PassportMarks& marks) {
  int need = n == 2 ? 4 : 3;
  if (marks.total() != need)
    fail(ErrorKind::WrongGenus, "genus-1 cover needs exactly " + std::to_string(need) +
                                    " marked entries for n=" + std::to_string(n));
  BranchingPassport out;
  const std::vector<int>* fibers[3] = {&passport0.over_inf, &passport0.over_zero,
                                       &passport0.over_one};
  const std::vector<int>* mk[3] = {&marks.over_inf, &marks.over_zero, &marks.over_one};
  std::vector<int>* dst[3] = {&out.over_inf, &out.over_zero, &out.over_one};
  for (int i = 0; i < 3; ++i) {
    std::multimap<int, bool> pool;  // entry -> marked?
    std::vector<int> fib = *fibers[i];
    std::vector<int> m = *mk[i];
    for (int e : m) {
      auto it = std::find(fib.begin(), fib.end(), e);
      if (it == fib.end())
        fail(ErrorKind::InvalidInput, "marked entry " + std::to_string(e) +
                                          " is not in the fiber");
      fib.erase(it);
      dst[i]->push_back(n * e);
    }
    for (int e : fib)
      for (int k = 0; k < n; ++k) dst[i]->push_back(e);
  }
  out.sort_entries();
  return out;
}

// ----- Psi2 -----

Psi2Cover make_psi2(const FieldElement& A, const FieldElement& B_sqrt) {
  const FieldPtr k = A.field();
  const FieldElement two = rat(k, 2), three = rat(k, 3), four = rat(k, 4);
  FieldElement denom = A + two * B_sqrt;
  if (denom.is_zero())
    fail(ErrorKind::DegenerateCover, "A + 2 sqrt(B) = 0 (branch quadratic degenerates)");
  const FieldElement B = B_sqrt * B_sqrt;
  // g(X) = (16/(A+2 sqrt B)) X^3 + 9 X^2 + 6 sqrt(B) X + B
  Polynomial g({B, rat(k, 6) * B_sqrt, rat(k, 9), rat(k, 16) / denom});
  SuperellipticCurve curve = make_curve(2, g);
  FuncFieldElem X = FuncFieldElem::x_coordinate(curve);
  FuncFieldElem Y = FuncFieldElem::y_coordinate(curve);
  auto cst = [&](const FieldElement& v) { return FuncFieldElem::constant(curve, v); };
  FuncFieldElem map = (Y + cst(three) * X + cst(B_sqrt)) / cst(two);

  // Exact critical-value certificate: the fiber of Psi2 over v is cut out by
  // the cubic X^3 + (3v(A+2sB)/4) X + (v(A+2sB)/4)(sB - v); its discriminant
  // must be a constant multiple of v^2 (v^2 + A v + B).
  using RF = RationalFunction;
  RF v = RF::identity(A);
  RF c1 = RF::constant(three / four) * RF::constant(denom) * v;
  RF c0 = RF::constant(denom / four) * v * (RF::constant(B_sqrt) - v);
  RF one = RF::constant(FieldElement::one(k));
  RF zero = RF::zero_with(A);
  Poly<RF> fiber_cubic(std::vector<RF>{c0, c1, zero, one});
  RF disc = discriminant(fiber_cubic);
  // disc must equal c * v^2 (v^2 + A v + B)
  RF expected_shape = v * v * (v * v + RF::constant(A) * v + RF::constant(B));
  RF ratio = disc / expected_shape;
  if (!ratio.is_constant() || ratio.is_zero())
    fail(ErrorKind::DegenerateCover, "Psi2 branch locus is not v^2 (v^2+Av+B)");
  return Psi2Cover{curve, map, A, B_sqrt};
}

// ----- exact y-linear fiber analysis -----

namespace {

// The quotient ring K[Y]/(Y^2 - g0); zero divisors are detected through the
// norm a^2 - b^2 g0 and exploited by the branch splitter.
struct QuadRingElem {
  FieldElement a, b, g0;

  QuadRingElem operator-() const { return {-a, -b, g0}; }
  QuadRingElem operator+(const QuadRingElem& o) const { return {a + o.a, b + o.b, g0}; }
  QuadRingElem operator-(const QuadRingElem& o) const { return {a - o.a, b - o.b, g0}; }
  QuadRingElem operator*(const QuadRingElem& o) const {
    return {a * o.a + b * o.b * g0, a * o.b + b * o.a, g0};
  }
  FieldElement norm() const { return a * a - b * b * g0; }
  QuadRingElem operator/(const QuadRingElem& o) const {
    FieldElement n = o.norm();
    if (n.is_zero()) fail(ErrorKind::DivisionByZero, "zero divisor in branch ring");
    // 1/(a+bY) = (a-bY)/norm
    QuadRingElem inv{o.a / n, -(o.b) / n, g0};
    return *this * inv;
  }
  bool operator==(const QuadRingElem& o) const { return a == o.a && b == o.b; }
};

QuadRingElem fe_zero(const QuadRingElem& ex) {
  return {FieldElement::zero(ex.a.field()), FieldElement::zero(ex.a.field()), ex.g0};
}
QuadRingElem fe_one(const QuadRingElem& ex) {
  return {FieldElement::one(ex.a.field()), FieldElement::zero(ex.a.field()), ex.g0};
}
bool fe_is_zero(const QuadRingElem& x) { return x.a.is_zero() && x.b.is_zero(); }

using QSeries = Poly<QuadRingElem>;

// Taylor shift: p(x0 + eps) truncated at eps^k.
Polynomial taylor_shift(const Polynomial& p, const FieldElement& x0, int k) {
  const FieldPtr fld = x0.field();
  Polynomial eps_plus_x0({x0, FieldElement::one(fld)});
  Polynomial acc = Polynomial::constant(FieldElement::zero(fld));
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * eps_plus_x0 + Polynomial::constant(p[i]);
    // truncate
    if (acc.degree() >= k) {
      std::vector<FieldElement> c(acc.coeffs().begin(), acc.coeffs().begin() + k);
      acc = Polynomial(std::move(c));
    }
  }
  return acc;
}

QSeries lift_series(const Polynomial& p, const FieldElement& g0, int k) {
  const FieldElement z = FieldElement::zero(g0.field());
  std::vector<QuadRingElem> c;
  for (int i = 0; i <= p.degree() && i < k; ++i) c.push_back({p[i], z, g0});
  return QSeries(std::move(c));
}

// Series of the rational function r at x0 (no pole there), truncated at k.
QSeries ratfun_series(const RationalFunction& r, const FieldElement& x0,
                      const FieldElement& g0, int k) {
  Polynomial n = taylor_shift(r.num(), x0, k);
  Polynomial d = taylor_shift(r.den(), x0, k);
  if (d.is_zero() || d[0].is_zero())
    fail(ErrorKind::NotSupported, "pole of the map at a split point");
  QSeries ns = lift_series(n, g0, k);
  QSeries ds = lift_series(d, g0, k);
  return mul_trunc(ns, inv_trunc(ds, k), k);
}

// Branch orders {e+, e-} of (r0 - w) + y r1 at the two points over x0, where
// g(x0) = g0 != 0, both branches lie in the fiber, and m = e+ + e-.
std::pair<int, int> split_branch_orders(const RationalFunction& r0,
                                        const RationalFunction& r1,
                                        const Polynomial& g,
                                        const FieldElement& x0,
                                        const FieldElement& w, int m) {
  const FieldPtr fld = x0.field();
  const FieldElement g0 = g.eval(x0);
  const int k = m + 1;
  QSeries gs = lift_series(taylor_shift(g, x0, k), g0, k);
  // y(eps) with y(0) = Y, Newton iteration y <- (y + g/y)/2
  QuadRingElem Yg{FieldElement::zero(fld), FieldElement::one(fld), g0};
  QuadRingElem half{FieldElement::from_rational(fld, Rational(1, 2)),
                    FieldElement::zero(fld), g0};
  QSeries y = QSeries::constant(Yg);
  for (int prec = 1; prec < k;) {
    prec = std::min(2 * prec, k);
    QSeries gy = mul_trunc(gs, inv_trunc(y, prec), prec);
    y = mul_trunc(y + gy, QSeries::constant(half), prec);
  }
  QSeries s0 = ratfun_series(r0, x0, g0, k);
  QSeries s1 = ratfun_series(r1, x0, g0, k);
  QuadRingElem wq{w, FieldElement::zero(fld), g0};
  QSeries total = s0 - QSeries::constant(wq) + mul_trunc(y, s1, k);
  for (int i = 0; i < k; ++i) {
    QuadRingElem c = total.coeff_or_zero(i, Yg);
    if (fe_is_zero(c)) continue;
    if (!c.norm().is_zero()) {
      if (2 * i != m)
        fail(ErrorKind::NotSupported, "inconsistent branch split");
      return {i, i};
    }
    // c = a + bY vanishes on exactly one branch: orders are {i, m-i}
    return {i, m - i};
  }
  fail(ErrorKind::NotSupported, "branch split did not terminate");
}

// Appends the entries of the fiber of (r0 + y r1) over w contributed by
// affine x (model = curve y^2 = g).  Infinity is handled by the caller via
// the flipped model.
void affine_fiber_entries(const RationalFunction& r0, const RationalFunction& r1,
                          const Polynomial& g, const FieldElement& w,
                          bool only_origin, std::vector<int>& out) {
  const FieldPtr fld = w.field();
  RationalFunction rw = r0 - RationalFunction::constant(w);
  RationalFunction N = rw * rw - RationalFunction(g) * r1 * r1;
  if (N.is_zero())
    fail(ErrorKind::InvalidInput, "constant map in fiber analysis");
  if (N.num().degree() < 1 && !only_origin) return;
  auto dec = squarefree_decompose(N.num());
  const Polynomial gm = g.monic();
  const Polynomial r1n = r1.is_zero() ? Polynomial() : r1.num().monic();
  for (const auto& part : dec.parts) {
    Polynomial piece = part.factor;
    const int m = part.multiplicity;
    if (only_origin) {
      // keep only the factor vanishing at the origin (the flipped infinity)
      Polynomial t_poly = Polynomial::identity(FieldElement::zero(fld));
      Polynomial h = poly_gcd(piece, t_poly);
      if (h.degree() < 1) continue;
      piece = h;
    }
    // poles of r0, r1 may not collide with fiber candidates
    if (!r0.den().is_constant() &&
        poly_gcd(piece, r0.den()).degree() > 0)
      fail(ErrorKind::NotSupported, "fiber candidate at a pole of the map");
    if (!r1.den().is_constant() &&
        poly_gcd(piece, r1.den()).degree() > 0)
      fail(ErrorKind::NotSupported, "fiber candidate at a pole of the map");
    // part (i): roots of g (Weierstrass points): one point, e = m
    Polynomial hg = poly_gcd(piece, gm);
    if (hg.degree() > 0) {
      for (int i = 0; i < hg.degree(); ++i) out.push_back(m);
      piece = piece / hg;
    }
    if (piece.degree() < 1) continue;
    // part (ii): zeros of r1: both branches in the fiber, split by series
    Polynomial hb = r1n.is_zero() ? Polynomial() : poly_gcd(piece, r1n);
    if (!hb.is_zero() && hb.degree() > 0) {
      if (hb.degree() > 1)
        fail(ErrorKind::NotSupported,
             "two-sheet fiber point of degree > 1 (cannot split exactly)");
      FieldElement x0 = -hb[0];  // root of the monic linear factor
      auto [e1, e2] = split_branch_orders(r0, r1, g, x0, w, m);
      if (e1 > 0) out.push_back(e1);
      if (e2 > 0) out.push_back(e2);
      piece = piece / hb;
    }
    // part (iii): generic: exactly one of the two points above each root
    for (int i = 0; i < piece.degree(); ++i) out.push_back(m);
  }
}

// Fiber entries over w for r0 + y r1 on y^2 = g, including points over
// x = infinity through the flip x -> 1/t, y -> s/t^2.
std::vector<int> ylinear_fiber(const RationalFunction& r0, const RationalFunction& r1,
                               const Polynomial& g, const FieldElement& w) {
  std::vector<int> out;
  affine_fiber_entries(r0, r1, g, w, false, out);
  // flipped model: s^2 = t^4 g(1/t)
  const FieldPtr fld = w.field();
  const FieldElement one = FieldElement::one(fld);
  Polynomial gflip = g.reversed(4);
  RationalFunction inv_t(Polynomial::constant(one),
                         Polynomial::identity(FieldElement::zero(fld)));
  RationalFunction t2(Polynomial({FieldElement::zero(fld), FieldElement::zero(fld), one}));
  RationalFunction r0f = ratfun_compose(r0, inv_t);
  RationalFunction r1f = ratfun_compose(r1, inv_t) / t2;
  affine_fiber_entries(r0f, r1f, gflip, w, true, out);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

Genus1Report ylinear_analysis(const SuperellipticCurve& curve,
                              const FuncFieldElem& value) {
  if (curve.n != 2)
    fail(ErrorKind::NotSupported, "exact fiber analysis implemented for n = 2");
  if (value.is_y_free())
    fail(ErrorKind::InvalidInput,
         "value is y-free; verify it as a cover composite instead");
  const RationalFunction& r0 = value.comp(0);
  const RationalFunction& r1 = value.comp(1);
  const FieldPtr fld = curve.field();
  const FieldElement zero = FieldElement::zero(fld);
  const FieldElement one = FieldElement::one(fld);

  Genus1Report rep;
  rep.passport.over_zero = ylinear_fiber(r0, r1, curve.f, zero);
  rep.passport.over_one = ylinear_fiber(r0, r1, curve.f, one);
  FuncFieldElem inv = value.inverse();
  rep.passport.over_inf = ylinear_fiber(inv.comp(0), inv.comp(1), curve.f, zero);
  rep.degree = rep.passport.degree();
  rep.ramification_sum = rep.passport.ramification_sum();
  rep.is_belyi =
      rep.passport.fiber_sums_match() && rep.ramification_sum == 2 * rep.degree;
  return rep;
}

Genus1BelyiMap make_explicit_genus1(const SuperellipticCurve& curve,
                                    const FuncFieldElem& value) {
  if (value.curve() != curve)
    fail(ErrorKind::CurveMismatch, "value lives on a different curve");
  if (value.is_y_free()) {
    Genus0BelyiMap base = make_genus0(value.comp(0));
    Genus1BelyiMap m = compose_with_cover(base, curve);
    m.provenance = Provenance::Explicit;
    return m;
  }
  Genus1Report rep = ylinear_analysis(curve, value);
  if (!rep.is_belyi)
    fail(ErrorKind::NotBelyi, "explicit genus-1 map fails the Riemann-Hurwitz count");
  return Genus1BelyiMap{curve, value, rep.passport, Provenance::Explicit};
}

}  // namespace belyi
