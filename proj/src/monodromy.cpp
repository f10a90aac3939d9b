#include "belyi/monodromy.hpp"

#include <algorithm>
#include <numeric>

namespace belyi {

bool PermutationTriple::product_is_identity() const {
  for (int p = 0; p < degree; ++p)
    if (sigma_inf[static_cast<size_t>(
            sigma1[static_cast<size_t>(sigma0[static_cast<size_t>(p)])])] != p)
      return false;
  return true;
}

bool PermutationTriple::transitive() const {
  if (degree == 0) return true;
  std::vector<bool> seen(static_cast<size_t>(degree), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (const auto* s : {&sigma0, &sigma1}) {
      int q = (*s)[static_cast<size_t>(p)];
      if (!seen[static_cast<size_t>(q)]) {
        seen[static_cast<size_t>(q)] = true;
        ++visited;
        stack.push_back(q);
      }
    }
  }
  return visited == degree;
}

std::vector<int> cycle_type(const std::vector<int>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  std::vector<int> out;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = static_cast<size_t>(sigma[j]);
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

int genus_from_triple(const PermutationTriple& t) {
  int cycles = static_cast<int>(cycle_type(t.sigma0).size() + cycle_type(t.sigma1).size() +
                                cycle_type(t.sigma_inf).size());
  // 2 - 2g = c0 + c1 + cinf - D
  int twog = 2 - (cycles - t.degree);
  return twog / 2;
}

BranchingPassport passport_of_triple(const PermutationTriple& t) {
  BranchingPassport p;
  p.over_inf = cycle_type(t.sigma_inf);
  p.over_zero = cycle_type(t.sigma0);
  p.over_one = cycle_type(t.sigma1);
  return p;
}

bool triples_equivalent(const PermutationTriple& a, const PermutationTriple& b) {
  if (a.degree != b.degree) return false;
  const int n = a.degree;
  if (n == 0) return true;
  if (cycle_type(a.sigma0) != cycle_type(b.sigma0) ||
      cycle_type(a.sigma1) != cycle_type(b.sigma1) ||
      cycle_type(a.sigma_inf) != cycle_type(b.sigma_inf))
    return false;
  // transitivity makes pi determined by pi(0); propagate and check.
  for (int seed = 0; seed < n; ++seed) {
    std::vector<int> pi(static_cast<size_t>(n), -1);
    pi[0] = seed;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      int p = stack.back();
      stack.pop_back();
      for (const auto& [sa, sb] : {std::pair{&a.sigma0, &b.sigma0},
                                   std::pair{&a.sigma1, &b.sigma1}}) {
        int q = (*sa)[static_cast<size_t>(p)];
        int target = (*sb)[static_cast<size_t>(pi[static_cast<size_t>(p)])];
        int& slot = pi[static_cast<size_t>(q)];
        if (slot == -1) {
          slot = target;
          stack.push_back(q);
        } else if (slot != target) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    // transitive action: pi is total; verify bijection and sigma_inf too
    std::vector<bool> hit(static_cast<size_t>(n), false);
    bool bij = true;
    for (int p = 0; p < n && bij; ++p) {
      int v = pi[static_cast<size_t>(p)];
      if (v < 0 || hit[static_cast<size_t>(v)]) bij = false;
      else hit[static_cast<size_t>(v)] = true;
    }
    if (!bij) continue;
    bool inf_ok = true;
    for (int p = 0; p < n && inf_ok; ++p)
      if (pi[static_cast<size_t>(a.sigma_inf[static_cast<size_t>(p)])] !=
          b.sigma_inf[static_cast<size_t>(pi[static_cast<size_t>(p)])])
        inf_ok = false;
    if (inf_ok) return true;
  }
  return false;
}

namespace {

// ---------- numeric engines, templated on the complex tier ----------

template <class C>
using Real = typename RealOf<C>::type;

template <class C>
C horner(const std::vector<C>& p, const C& x) {
  C acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

template <class C>
std::vector<C> derivative(const std::vector<C>& p) {
  std::vector<C> d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * C(static_cast<int>(i)));
  return d;
}

// A sheet of the covering: x always tracked; y tracked for curve maps.
template <class C>
struct Sheet {
  C x;
  C y;
  bool has_y = false;
};

// Numeric model of the map: evaluate F(sheet, w) whose zero locus defines the
// fiber, with the x-derivative for Newton; plus the curve equation for y.
template <class C>
struct NumericMap {
  // kind A: phi(x) = w  (genus 0 or y-free on a cover)
  // kind B: H(x, w) = A(x) - 2 w B(x) + w^2 C(x) = 0 (y-linear norm)
  bool is_norm = false;
  std::vector<C> num, den;        // phi for kind A
  std::vector<C> dnum, dden;
  std::vector<C> ha, hb, hc;      // kind B coefficients
  std::vector<C> dha, dhb, dhc;
  int cover_n = 0;                // 0 = plain P^1; else y^n = f
  std::vector<C> f, df;           // cover polynomial
  int degree = 0;                 // number of sheets

  C fiber_poly(const C& x, const C& w) const {
    if (is_norm) return horner(ha, x) - C(2) * w * horner(hb, x) + w * w * horner(hc, x);
    return horner(num, x) - w * horner(den, x);
  }
  C fiber_poly_dx(const C& x, const C& w) const {
    if (is_norm) return horner(dha, x) - C(2) * w * horner(dhb, x) + w * w * horner(dhc, x);
    return horner(dnum, x) - w * horner(dden, x);
  }
  std::vector<C> fiber_coeffs(const C& w) const {
    std::vector<C> out;
    if (is_norm) {
      size_t m = std::max({ha.size(), hb.size(), hc.size()});
      out.assign(m, C(0));
      for (size_t i = 0; i < ha.size(); ++i) out[i] += ha[i];
      for (size_t i = 0; i < hb.size(); ++i) out[i] -= C(2) * w * hb[i];
      for (size_t i = 0; i < hc.size(); ++i) out[i] += w * w * hc[i];
    } else {
      size_t m = std::max(num.size(), den.size());
      out.assign(m, C(0));
      for (size_t i = 0; i < num.size(); ++i) out[i] += num[i];
      for (size_t i = 0; i < den.size(); ++i) out[i] -= w * den[i];
    }
    return out;
  }
};

template <class C>
bool newton_xy(const NumericMap<C>& m, Sheet<C>& s, const C& w, const Real<C>& tol) {
  for (int it = 0; it < 12; ++it) {
    C fval = m.fiber_poly(s.x, w);
    C dval = m.fiber_poly_dx(s.x, w);
    if (abs(dval) == 0) return false;
    C step = fval / dval;
    s.x -= step;
    if (abs(step) < tol * std::max(Real<C>(1), abs(s.x))) {
      if (s.has_y) {
        // refine y on the curve from the previous branch value
        for (int jt = 0; jt < 24; ++jt) {
          C yp = pow(s.y, m.cover_n - 1);
          C g = yp * s.y - horner(m.f, s.x);
          C dg = C(m.cover_n) * yp;
          if (abs(dg) == 0) return false;
          C dy = g / dg;
          s.y -= dy;
          if (abs(dy) < tol * std::max(Real<C>(1), abs(s.y))) break;
        }
      }
      return true;
    }
  }
  return false;
}

template <class C>
std::vector<Sheet<C>> base_fiber(const NumericMap<C>& m, const C& w) {
  std::vector<C> coeffs = m.fiber_coeffs(w);
  std::vector<C> xs = polynomial_roots(coeffs);
  std::vector<Sheet<C>> out;
  if (m.cover_n > 0 && !m.is_norm) {
    for (const C& x : xs) {
      // all n-th roots of f(x)
      C fx = horner(m.f, x);
      C y0 = exp(log(fx) / m.cover_n);
      const Real<C> pi = atan(Real<C>(1)) * 4;
      for (int k = 0; k < m.cover_n; ++k) {
        Real<C> th = 2 * pi * k / m.cover_n;
        out.push_back({x, y0 * C(cos(th), sin(th)), true});
      }
    }
  } else if (m.is_norm) {
    for (const C& x : xs) out.push_back({x, C(0), false});
  } else {
    for (const C& x : xs) out.push_back({x, C(0), false});
  }
  return out;
}

// Loop path around center c starting and ending at base b: radial approach,
// full counterclockwise circle, radial return.
template <class C>
std::vector<C> loop_path(const C& b, const C& c, const Real<C>& radius, int steps) {
  std::vector<C> path;
  C dir = (b - c) / abs(b - c);
  C entry = c + radius * dir;
  for (int i = 0; i <= steps; ++i) {
    Real<C> t = Real<C>(i) / steps;
    path.push_back(b + (entry - b) * t);
  }
  const Real<C> pi = atan(Real<C>(1)) * 4;
  Real<C> theta0 = atan2(dir.imag(), dir.real());
  for (int i = 1; i <= 2 * steps; ++i) {
    Real<C> th = theta0 + 2 * pi * Real<C>(i) / (2 * steps);
    path.push_back(c + radius * C(cos(th), sin(th)));
  }
  for (int i = 1; i <= steps; ++i) {
    Real<C> t = Real<C>(i) / steps;
    path.push_back(entry + (b - entry) * t);
  }
  return path;
}

template <class C>
bool continue_along(const NumericMap<C>& m, std::vector<Sheet<C>>& sheets,
                    const std::vector<C>& path, const Real<C>& tol) {
  for (size_t i = 1; i < path.size(); ++i) {
    for (auto& s : sheets)
      if (!newton_xy(m, s, path[i], tol)) return false;
  }
  return true;
}

template <class C>
bool match_permutation(const std::vector<Sheet<C>>& start,
                       const std::vector<Sheet<C>>& end, double cluster_tol,
                       std::vector<int>& sigma) {
  const size_t n = start.size();
  sigma.assign(n, -1);
  std::vector<bool> used(n, false);
  for (size_t i = 0; i < n; ++i) {
    int best = -1;
    Real<C> best_dist = 0;
    for (size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      Real<C> d = abs(end[i].x - start[j].x);
      if (start[j].has_y) d += abs(end[i].y - start[j].y);
      if (best < 0 || d < best_dist) {
        best = static_cast<int>(j);
        best_dist = d;
      }
    }
    Real<C> scale = std::max(Real<C>(1), abs(end[i].x));
    if (best < 0 || best_dist > Real<C>(cluster_tol) * scale * 100) return false;
    used[static_cast<size_t>(best)] = true;
    // sheet i travels to the slot of sheet `best`: the loop permutes
    // start[j] -> end position landing on start[sigma(j)]
    sigma[static_cast<size_t>(best)] = static_cast<int>(i);
  }
  for (int v : sigma)
    if (v < 0) return false;
  return true;
}

template <class C>
std::vector<int> run_loop(const NumericMap<C>& m, const std::vector<Sheet<C>>& fiber,
                          const C& base, const C& center, const Real<C>& radius,
                          int steps, double cluster_tol) {
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<Sheet<C>> sheets = fiber;
    std::vector<C> path = loop_path(base, center, radius, steps << attempt);
    const Real<C> tol = ldexp(Real<C>(1), -(std::numeric_limits<Real<C>>::digits * 2 / 3));
    if (!continue_along(m, sheets, path, tol)) continue;
    std::vector<int> sigma;
    if (match_permutation(fiber, sheets, cluster_tol, sigma)) return sigma;
  }
  fail(ErrorKind::PrecisionError,
       "path continuation failed; raise precision or path steps");
}

template <class C>
PermutationTriple triple_from_map(const NumericMap<C>& m,
                                  const NumericSettings& settings) {
  C base(settings.base_point.real(), settings.base_point.imag());
  std::vector<Sheet<C>> fiber;
  for (int attempt = 0;; ++attempt) {
    fiber = base_fiber(m, base);
    // sanity: sheet count and separation
    bool ok = static_cast<int>(fiber.size()) == m.degree;
    for (size_t i = 0; ok && i < fiber.size(); ++i)
      for (size_t j = i + 1; ok && j < fiber.size(); ++j) {
        Real<C> d = abs(fiber[i].x - fiber[j].x);
        if (fiber[i].has_y) d += abs(fiber[i].y - fiber[j].y);
        if (d < Real<C>(settings.cluster_tol)) ok = false;
      }
    if (ok) break;
    if (attempt >= 1)
      fail(ErrorKind::PrecisionError, "could not resolve the base fiber");
    base += C(0, 1) / 7;  // degenerate base point: shift and retry once
  }
  // order sheets lexicographically by (re x, im x, re y, im y)
  std::sort(fiber.begin(), fiber.end(), [](const Sheet<C>& a, const Sheet<C>& b) {
    if (a.x.real() != b.x.real()) return a.x.real() < b.x.real();
    if (a.x.imag() != b.x.imag()) return a.x.imag() < b.x.imag();
    if (a.y.real() != b.y.real()) return a.y.real() < b.y.real();
    return a.y.imag() < b.y.imag();
  });
  const Real<C> radius = Real<C>(1) / 4;
  PermutationTriple t;
  t.degree = m.degree;
  t.sigma0 = run_loop(m, fiber, base, C(0), radius, settings.path_steps,
                      settings.cluster_tol);
  t.sigma1 = run_loop(m, fiber, base, C(1), radius, settings.path_steps,
                      settings.cluster_tol);
  t.sigma_inf.assign(static_cast<size_t>(m.degree), 0);
  for (int p = 0; p < m.degree; ++p)
    t.sigma_inf[static_cast<size_t>(
        t.sigma1[static_cast<size_t>(t.sigma0[static_cast<size_t>(p)])])] = p;
  if (!t.product_is_identity())
    fail(ErrorKind::PrecisionError, "monodromy product check failed");
  if (!t.transitive())
    fail(ErrorKind::PrecisionError, "monodromy action is not transitive");
  return t;
}

template <class C>
NumericMap<C> build_genus0(const RationalFunction& map, int embedding) {
  NumericMap<C> m;
  std::vector<C> roots = field_roots<C>(map.exemplar().field());
  C root = roots[static_cast<size_t>(embedding % roots.size())];
  m.num = embed_poly(map.num(), root);
  m.den = embed_poly(map.den(), root);
  m.dnum = derivative(m.num);
  m.dden = derivative(m.den);
  m.degree = map.degree();
  return m;
}

template <class C>
NumericMap<C> build_genus1(const Genus1BelyiMap& map, int embedding) {
  NumericMap<C> m;
  const FieldPtr field = map.curve.field();
  std::vector<C> roots = field_roots<C>(field);
  C root = roots[static_cast<size_t>(embedding % roots.size())];
  m.degree = static_cast<int>(map.degree());
  if (map.value.is_y_free()) {
    const RationalFunction& phi = map.value.comp(0);
    m.num = embed_poly(phi.num(), root);
    m.den = embed_poly(phi.den(), root);
    m.dnum = derivative(m.num);
    m.dden = derivative(m.den);
    m.cover_n = map.curve.n;
    m.f = embed_poly(map.curve.f, root);
    m.df = derivative(m.f);
    return m;
  }
  if (map.curve.n != 2)
    fail(ErrorKind::NotSupported, "numeric monodromy of y-carrying maps needs n = 2");
  // norm polynomial H(x,w) = (p - w q)^2 t^2 - f s^2 q^2 over K[x][w]
  const RationalFunction& r0 = map.value.comp(0);
  const RationalFunction& r1 = map.value.comp(1);
  Polynomial p = r0.num(), q = r0.den(), s = r1.num(), tpol = r1.den();
  Polynomial A = p * p * tpol * tpol - map.curve.f * s * s * q * q;
  Polynomial B = p * q * tpol * tpol;
  Polynomial Cc = q * q * tpol * tpol;
  // strip the x-content shared by all w-coefficients
  Polynomial content = poly_gcd(poly_gcd(A, B), Cc);
  if (content.degree() > 0) {
    A = A / content;
    B = B / content;
    Cc = Cc / content;
  }
  if (m.degree == 0)
    m.degree = A.degree();  // maps built without a verified passport
  else if (A.degree() != m.degree)
    fail(ErrorKind::PrecisionError, "norm polynomial degree mismatch");
  m.is_norm = true;
  m.ha = embed_poly(A, root);
  m.hb = embed_poly(B, root);
  m.hc = embed_poly(Cc, root);
  m.dha = derivative(m.ha);
  m.dhb = derivative(m.hb);
  m.dhc = derivative(m.hc);
  return m;
}

// ---------- critical values ----------

template <class C>
void cluster_values(std::vector<C>& vals, double tol, CriticalValues& out) {
  std::vector<C> reps;
  for (const C& v : vals) {
    bool merged = false;
    for (C& r : reps) {
      if (abs(v - r) <= Real<C>(tol) * std::max(Real<C>(1), abs(r))) {
        merged = true;
        break;
      }
    }
    if (!merged) reps.push_back(v);
  }
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i + 1; j < reps.size(); ++j)
      if (abs(reps[i] - reps[j]) <
          Real<C>(10 * tol) * std::max(Real<C>(1), abs(reps[i])))
        fail(ErrorKind::PrecisionError,
             "critical-value clusters too close; raise precision");
  for (const C& r : reps)
    out.finite.push_back(std::complex<double>(static_cast<double>(r.real()),
                                              static_cast<double>(r.imag())));
}

template <class C>
CriticalValues critical_values_genus0_impl(const RationalFunction& map,
                                           const NumericSettings& settings) {
  CriticalValues out;
  std::vector<C> roots_of_field = field_roots<C>(map.exemplar().field());
  C root = roots_of_field[static_cast<size_t>(settings.embedding_index %
                                              roots_of_field.size())];
  std::vector<C> num = embed_poly(map.num(), root);
  std::vector<C> den = embed_poly(map.den(), root);
  Polynomial wr = map.num().derivative() * map.den() - map.num() * map.den().derivative();
  std::vector<C> vals;
  if (!wr.is_zero() && wr.degree() > 0) {
    auto dec = squarefree_decompose(wr);
    for (const auto& part : dec.parts) {
      if (part.factor.degree() < 1) continue;
      std::vector<C> pc = embed_poly(part.factor, root);
      for (const C& x : polynomial_roots(pc)) {
        C dv = horner(den, x);
        C nv = horner(num, x);
        if (abs(dv) <= Real<C>(settings.cluster_tol) * std::max(Real<C>(1), abs(nv)))
          out.at_infinity = true;
        else
          vals.push_back(nv / dv);
      }
    }
  }
  // ramification at the infinite point
  int dn = map.num().degree(), dd = map.den().degree();
  if (dn > dd) {
    if (dn - dd >= 2) out.at_infinity = true;
  } else if (dd > dn) {
    if (dd - dn >= 2) vals.push_back(C(0));
  } else {
    FieldElement lcr = map.num().lc() / map.den().lc();
    Polynomial shifted = map.num() - map.den().scaled(lcr);
    int e = dn - (shifted.is_zero() ? 0 : shifted.degree());
    if (e >= 2) vals.push_back(embed_element(lcr, root));
  }
  cluster_values(vals, settings.cluster_tol, out);
  return out;
}

template <class C>
CriticalValues critical_values_genus1_impl(const Genus1BelyiMap& map,
                                           const NumericSettings& settings) {
  CriticalValues out;
  const FieldPtr field = map.curve.field();
  std::vector<C> froots = field_roots<C>(field);
  C root = froots[static_cast<size_t>(settings.embedding_index % froots.size())];
  std::vector<C> vals;
  if (map.value.is_y_free()) {
    const RationalFunction& phi = map.value.comp(0);
    CriticalValues base = critical_values_genus0_impl<C>(phi, settings);
    out.at_infinity = base.at_infinity;
    for (const auto& v : base.finite) vals.push_back(C(v.real(), v.imag()));
    // images of the cover branch points
    std::vector<C> num = embed_poly(phi.num(), root);
    std::vector<C> den = embed_poly(phi.den(), root);
    BranchPoints bp = cover_branch_points(map.curve);
    for (const Polynomial& fac : bp.factors) {
      for (const C& x : polynomial_roots(embed_poly(fac, root))) {
        C dv = horner(den, x);
        C nv = horner(num, x);
        if (abs(dv) <= Real<C>(settings.cluster_tol) * std::max(Real<C>(1), abs(nv)))
          out.at_infinity = true;
        else
          vals.push_back(nv / dv);
      }
    }
    if (bp.at_infinity) {
      if (phi.num().degree() > phi.den().degree()) out.at_infinity = true;
      else if (phi.num().degree() < phi.den().degree()) vals.push_back(C(0));
      else vals.push_back(embed_element(phi.num().lc() / phi.den().lc(), root));
    }
    cluster_values(vals, settings.cluster_tol, out);
    return out;
  }
  // y-linear: exact w-discriminant of the norm polynomial gives candidates
  NumericMap<C> m = build_genus1<C>(map, settings.embedding_index);
  const RationalFunction& r0 = map.value.comp(0);
  const RationalFunction& r1 = map.value.comp(1);
  Polynomial p = r0.num(), q = r0.den(), s = r1.num(), tpol = r1.den();
  Polynomial A = p * p * tpol * tpol - map.curve.f * s * s * q * q;
  Polynomial B = p * q * tpol * tpol;
  Polynomial Cc = q * q * tpol * tpol;
  Polynomial content = poly_gcd(poly_gcd(A, B), Cc);
  if (content.degree() > 0) {
    A = A / content;
    B = B / content;
    Cc = Cc / content;
  }
  // H as a polynomial in x with coefficients rational functions of w
  const FieldElement fe1 = fe_one(map.curve.f.exemplar());
  const FieldElement zero = fe_zero(fe1);
  const FieldElement two = fe1 + fe1;
  RationalFunction w = RationalFunction::identity(fe1);
  std::vector<RationalFunction> hcoeffs;
  int dmax = std::max({A.degree(), B.degree(), Cc.degree()});
  for (int i = 0; i <= dmax; ++i) {
    RationalFunction ci =
        RationalFunction::constant(A.coeff_or_zero(i, zero)) -
        w * RationalFunction::constant(two * B.coeff_or_zero(i, zero)) +
        w * w * RationalFunction::constant(Cc.coeff_or_zero(i, zero));
    hcoeffs.push_back(ci);
  }
  Poly<RationalFunction> H(std::move(hcoeffs));
  RationalFunction disc = discriminant(H);
  std::vector<C> cand;
  if (!disc.is_zero() && disc.num().degree() > 0) {
    auto dec = squarefree_decompose(disc.num());
    for (const auto& part : dec.parts)
      for (const C& wv : polynomial_roots(embed_poly(part.factor, root)))
        cand.push_back(wv);
  }
  // verify candidates by counting distinct fiber points
  for (const C& wv : cand) {
    std::vector<C> coeffs = m.fiber_coeffs(wv);
    std::vector<C> xs;
    try {
      xs = polynomial_roots(coeffs);
    } catch (const Error&) {
      vals.push_back(wv);  // badly conditioned fiber = ramified
      continue;
    }
    int distinct = 0;
    std::vector<bool> dup(xs.size(), false);
    for (size_t i = 0; i < xs.size(); ++i) {
      if (dup[i]) continue;
      ++distinct;
      for (size_t j = i + 1; j < xs.size(); ++j)
        if (abs(xs[i] - xs[j]) <
            Real<C>(1e-6) * std::max(Real<C>(1), abs(xs[i])))
          dup[j] = true;
    }
    if (distinct < m.degree || static_cast<int>(xs.size()) < m.degree)
      vals.push_back(wv);
  }
  // infinity: critical iff the exact infinite fiber carries ramification
  Genus1Report full = ylinear_analysis(map.curve, map.value);
  for (int e : full.passport.over_inf)
    if (e >= 2) out.at_infinity = true;
  cluster_values(vals, settings.cluster_tol, out);
  return out;
}

}  // namespace

PermutationTriple permutation_triple(const RationalFunction& map,
                                     const NumericSettings& settings) {
  switch (tier_for_bits(settings.precision_bits)) {
    case 0: return triple_from_map(build_genus0<Cplx25>(map, settings.embedding_index), settings);
    case 1: return triple_from_map(build_genus0<Cplx40>(map, settings.embedding_index), settings);
    case 2: return triple_from_map(build_genus0<Cplx80>(map, settings.embedding_index), settings);
    default: return triple_from_map(build_genus0<Cplx160>(map, settings.embedding_index), settings);
  }
}

PermutationTriple permutation_triple(const Genus1BelyiMap& map,
                                     const NumericSettings& settings) {
  switch (tier_for_bits(settings.precision_bits)) {
    case 0: return triple_from_map(build_genus1<Cplx25>(map, settings.embedding_index), settings);
    case 1: return triple_from_map(build_genus1<Cplx40>(map, settings.embedding_index), settings);
    case 2: return triple_from_map(build_genus1<Cplx80>(map, settings.embedding_index), settings);
    default: return triple_from_map(build_genus1<Cplx160>(map, settings.embedding_index), settings);
  }
}

CriticalValues critical_values_numeric(const RationalFunction& map,
                                       const NumericSettings& settings) {
  switch (tier_for_bits(settings.precision_bits)) {
    case 0: return critical_values_genus0_impl<Cplx25>(map, settings);
    case 1: return critical_values_genus0_impl<Cplx40>(map, settings);
    case 2: return critical_values_genus0_impl<Cplx80>(map, settings);
    default: return critical_values_genus0_impl<Cplx160>(map, settings);
  }
}

CriticalValues critical_values_numeric(const Genus1BelyiMap& map,
                                       const NumericSettings& settings) {
  switch (tier_for_bits(settings.precision_bits)) {
    case 0: return critical_values_genus1_impl<Cplx25>(map, settings);
    case 1: return critical_values_genus1_impl<Cplx40>(map, settings);
    case 2: return critical_values_genus1_impl<Cplx80>(map, settings);
    default: return critical_values_genus1_impl<Cplx160>(map, settings);
  }
}

}  // namespace belyi
