#include "belyi/isogeny.hpp"

namespace belyi {

namespace {

bool rational_is_square(const Rational& q, Rational& root) {
  if (q < 0) return false;
  if (q == 0) {
    root = 0;
    return true;
  }
  Integer n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn) / Rational(rd);
  return true;
}

bool rational_is_cube(const Rational& q, Rational& root) {
  Integer n = q.get_num(), d = q.get_den();
  Integer rn, rd;
  bool okn = mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3) != 0;
  bool okd = mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3) != 0;
  if (!okn || !okd) return false;
  root = Rational(rn) / Rational(rd);
  return true;
}

// Square test in a quadratic field Q(sqrt(disc)) presented by t^2 + m1 t + m0.
// c = a + b t is a square iff (p + q t)^2 = c has a rational solution.
bool quadratic_field_square(const FieldElement& c, FieldElement& root) {
  const FieldPtr k = c.field();
  const Rational a = c.coords()[0], b = c.coords()[1];
  const Rational m0 = k->minpoly()[0], m1 = k->minpoly()[1];
  // t^2 = -m1 t - m0; (p+qt)^2 = p^2 - q^2 m0 + (2pq - q^2 m1) t
  // b = q(2p - q m1), a = p^2 - q^2 m0.
  if (b == 0) {
    // either q = 0 (p^2 = a) or p = q m1 / 2 (then a = q^2 (m1^2/4 - m0))
    Rational r;
    if (rational_is_square(a, r)) {
      root = FieldElement::from_rational(k, r);
      return true;
    }
    Rational denom = m1 * m1 / 4 - m0;
    if (denom != 0) {
      Rational q2 = a / denom;
      if (rational_is_square(q2, r)) {
        root = FieldElement(k, {m1 * r / 2, r});
        return true;
      }
    }
    return false;
  }
  // q != 0: p = (b/q + q m1)/2; substitute into a = p^2 - q^2 m0:
  // 4a q^2 = (b + q^2 m1)^2 - 4 q^4 m0 -> quadratic in s = q^2:
  // (m1^2 - 4 m0) s^2 + (2 b m1 - 4a) s + b^2 = 0
  Rational A = m1 * m1 - 4 * m0;
  Rational B = 2 * b * m1 - 4 * a;
  Rational C = b * b;
  // solve A s^2 + B s + C = 0 over Q, require s a rational square
  std::vector<Rational> candidates;
  if (A == 0) {
    if (B != 0) candidates.push_back(-C / B);
  } else {
    Rational disc = B * B - 4 * A * C;
    Rational sq;
    if (rational_is_square(disc, sq)) {
      candidates.push_back((-B + sq) / (2 * A));
      candidates.push_back((-B - sq) / (2 * A));
    }
  }
  for (const Rational& s : candidates) {
    Rational q;
    if (!rational_is_square(s, q) || q == 0) continue;
    Rational p = (b / q + q * m1) / 2;
    FieldElement cand(k, {p, q});
    if (cand * cand == c) {
      root = cand;
      return true;
    }
  }
  return false;
}

}  // namespace

IsogenyReport verify_isogeny_full(const IsogenyMap& iso) {
  IsogenyReport rep;
  if (!iso.R.has_value())
    fail(ErrorKind::InvalidInput, "full verification needs the y-component R");
  const int n = iso.source.n;
  {
    RationalFunction lhs = RationalFunction(iso.source.f) * iso.R->pow(n);
    RationalFunction rhs = eval_poly_at(iso.target.f, iso.u);
    bool ok = lhs == rhs;
    rep.checks.push_back({"curve identity f*R^n = g(u)", ok,
                          ok ? "exact" : "sides differ"});
  }
  {
    bool ok = iso.u.num().degree() > iso.u.den().degree();
    rep.checks.push_back({"infinity maps to infinity", ok,
                          "deg num u = " + std::to_string(iso.u.num().degree()) +
                              ", deg den u = " + std::to_string(iso.u.den().degree())});
  }
  {
    int d = iso.u.degree();
    bool ok = d == iso.degree;
    rep.checks.push_back({"stated degree", ok,
                          "computed " + std::to_string(d) + ", stated " +
                              std::to_string(iso.degree)});
  }
  return rep;
}

XOnlyResult verify_isogeny_xonly(const Polynomial& f_source, const Polynomial& g_target,
                                 const RationalFunction& u, int n) {
  XOnlyResult out;
  RationalFunction quotient = eval_poly_at(g_target, u) / RationalFunction(f_source);
  auto pw = constant_times_power(quotient, n);
  if (!pw.is_power) return out;
  out.ok = true;
  out.c = pw.constant;
  out.R = pw.root;
  const FieldPtr k = out.c.field();
  if (k->degree() == 2 && n == 2) {
    FieldElement root = FieldElement::zero(k);
    out.c_is_nth_power = quadratic_field_square(out.c, root);
    if (out.c_is_nth_power) out.c_root = root;
  } else if (out.c.is_rational()) {
    // a rational n-th root certifies the power; the converse holds over Q
    Rational root;
    bool ok = n == 2 ? rational_is_square(out.c.rational_value(), root)
                     : rational_is_cube(out.c.rational_value(), root);
    out.c_is_nth_power = ok;
    if (ok) out.c_root = FieldElement::from_rational(k, root);
  } else {
    out.c_is_nth_power = false;  // undetermined over higher-degree fields
  }
  return out;
}

Genus1BelyiMap compose_isogeny(const Genus1BelyiMap& base, const IsogenyMap& iso) {
  if (base.curve != iso.target)
    fail(ErrorKind::CurveMismatch, "base map does not live on the isogeny target");
  if (!base.value.is_y_free() && !iso.R.has_value())
    fail(ErrorKind::InvalidInput, "pulling back a y-dependent map needs R");
  const RationalFunction one_rf =
      RationalFunction::constant(fe_one(iso.source.f.exemplar()));
  std::vector<RationalFunction> comps;
  RationalFunction rpow = one_rf;
  for (int i = 0; i < iso.source.n; ++i) {
    RationalFunction ci = base.value.comp(i);
    RationalFunction lifted = ci.is_zero()
        ? RationalFunction::zero_with(iso.source.f.exemplar())
        : ratfun_compose(ci, iso.u);
    comps.push_back(lifted * rpow);
    if (iso.R.has_value()) rpow = rpow * (*iso.R);
  }
  FuncFieldElem value(iso.source, std::move(comps));
  BranchingPassport p = base.passport.repeated(iso.degree);
  long D = p.degree();
  if (!p.fiber_sums_match() || p.ramification_sum() != 2 * D)
    fail(ErrorKind::NotBelyi, "isogeny composite fails the Riemann-Hurwitz count");
  return Genus1BelyiMap{iso.source, value, p, Provenance::IsogenyComposite};
}

}  // namespace belyi
