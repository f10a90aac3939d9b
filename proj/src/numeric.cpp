#include "belyi/numeric.hpp"

#include <algorithm>

namespace belyi {

int tier_for_bits(int bits) {
  if (bits <= 83) return 0;
  if (bits <= 132) return 1;
  if (bits <= 265) return 2;
  if (bits <= 531) return 3;
  fail(ErrorKind::PrecisionError, "requested precision above 531 bits");
}

int tier_bits(int tier) {
  switch (tier) {
    case 0: return 83;
    case 1: return 132;
    case 2: return 265;
    default: return 531;
  }
}

template <class C>
std::vector<C> polynomial_roots(std::vector<C> coeffs, int max_iters) {
  using R = typename RealOf<C>::type;
  while (!coeffs.empty() && abs(coeffs.back()) == 0) coeffs.pop_back();
  if (coeffs.size() < 2) return {};
  const int n = static_cast<int>(coeffs.size()) - 1;
  // monic normalize
  C lc = coeffs.back();
  for (auto& c : coeffs) c /= lc;
  R radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, abs(coeffs[static_cast<size_t>(i)]));
  radius += 1;
  std::vector<C> z(static_cast<size_t>(n));
  const R pi = atan(R(1)) * 4;
  for (int k = 0; k < n; ++k) {
    R theta = R(2) * pi * R(k) / R(n) + R(1) / R(2 * n + 3);
    z[static_cast<size_t>(k)] = radius * C(cos(theta), sin(theta));
  }
  auto eval = [&](const C& x) {
    C acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  };
  const R eps = ldexp(R(1), -(std::numeric_limits<R>::digits * 2 / 3));
  for (int iter = 0; iter < max_iters; ++iter) {
    R worst = 0;
    for (int k = 0; k < n; ++k) {
      C denom = 1;
      for (int j = 0; j < n; ++j)
        if (j != k) denom *= z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
      if (abs(denom) == 0) {
        z[static_cast<size_t>(k)] += C(R(1) / R(1000), R(1) / R(997));
        worst = 1;
        continue;
      }
      C delta = eval(z[static_cast<size_t>(k)]) / denom;
      z[static_cast<size_t>(k)] -= delta;
      R rel = abs(delta) / std::max(R(1), abs(z[static_cast<size_t>(k)]));
      worst = std::max(worst, rel);
    }
    if (worst < eps) return z;
  }
  fail(ErrorKind::PrecisionError, "root refinement did not converge");
}

template <class C>
std::vector<C> field_roots(const FieldPtr& field) {
  using R = typename RealOf<C>::type;
  std::vector<C> coeffs;
  coeffs.reserve(field->minpoly().size());
  for (const auto& q : field->minpoly())
    coeffs.push_back(C(R(q.get_num().get_str()) / R(q.get_den().get_str()), 0));
  std::vector<C> roots = polynomial_roots(coeffs);
  const R sep = ldexp(R(1), -(std::numeric_limits<R>::digits / 2));
  std::sort(roots.begin(), roots.end(), [&](const C& a, const C& b) {
    if (abs(a.real() - b.real()) > sep) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  for (size_t i = 1; i < roots.size(); ++i)
    if (abs(roots[i] - roots[i - 1]) < sep)
      fail(ErrorKind::PrecisionError, "precision too low to separate field roots");
  return roots;
}

template <class C>
C embed_element(const FieldElement& a, const C& root) {
  using R = typename RealOf<C>::type;
  C acc = 0;
  const auto& co = a.coords();
  for (size_t i = co.size(); i-- > 0;) {
    C ci(R(co[i].get_num().get_str()) / R(co[i].get_den().get_str()), 0);
    acc = acc * root + ci;
  }
  return acc;
}

template <class C>
std::vector<C> embed_poly(const Polynomial& p, const C& root) {
  std::vector<C> out;
  out.reserve(static_cast<size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) out.push_back(embed_element(p[i], root));
  return out;
}

EmbedComplex embed(const FieldElement& a, int root_index, int precision_bits) {
  (void)tier_for_bits(precision_bits);  // validates the request
  const FieldPtr field = a.field();
  if (root_index < 0 || root_index >= field->degree())
    fail(ErrorKind::InvalidInput, "root index out of range");
  std::vector<EmbedComplex> roots = field_roots<EmbedComplex>(field);
  return embed_element(a, roots[static_cast<size_t>(root_index)]);
}

// explicit instantiations for the precision tiers
template std::vector<Cplx25> polynomial_roots<Cplx25>(std::vector<Cplx25>, int);
template std::vector<Cplx40> polynomial_roots<Cplx40>(std::vector<Cplx40>, int);
template std::vector<Cplx80> polynomial_roots<Cplx80>(std::vector<Cplx80>, int);
template std::vector<Cplx160> polynomial_roots<Cplx160>(std::vector<Cplx160>, int);
template std::vector<Cplx25> field_roots<Cplx25>(const FieldPtr&);
template std::vector<Cplx40> field_roots<Cplx40>(const FieldPtr&);
template std::vector<Cplx80> field_roots<Cplx80>(const FieldPtr&);
template std::vector<Cplx160> field_roots<Cplx160>(const FieldPtr&);
template Cplx25 embed_element<Cplx25>(const FieldElement&, const Cplx25&);
template Cplx40 embed_element<Cplx40>(const FieldElement&, const Cplx40&);
template Cplx80 embed_element<Cplx80>(const FieldElement&, const Cplx80&);
template Cplx160 embed_element<Cplx160>(const FieldElement&, const Cplx160&);
template std::vector<Cplx25> embed_poly<Cplx25>(const Polynomial&, const Cplx25&);
template std::vector<Cplx40> embed_poly<Cplx40>(const Polynomial&, const Cplx40&);
template std::vector<Cplx80> embed_poly<Cplx80>(const Polynomial&, const Cplx80&);
template std::vector<Cplx160> embed_poly<Cplx160>(const Polynomial&, const Cplx160&);

}  // namespace belyi
