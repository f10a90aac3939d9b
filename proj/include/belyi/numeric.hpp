#ifndef BELYI_NUMERIC_HPP
#define BELYI_NUMERIC_HPP

#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <vector>

#include "belyi/ratfun.hpp"

namespace belyi {

// Working precisions are compile-time tiers; a requested bit count is rounded
// up to the nearest tier.
using Cplx25 = boost::multiprecision::cpp_complex<25>;   // ~83 bits
using Cplx40 = boost::multiprecision::cpp_complex<40>;   // ~132 bits
using Cplx80 = boost::multiprecision::cpp_complex<80>;   // ~265 bits
using Cplx160 = boost::multiprecision::cpp_complex<160>; // ~531 bits

int tier_for_bits(int bits);  // 0..3
int tier_bits(int tier);

template <class C>
struct RealOf {
  using type = typename C::value_type;
};

// Monic-normalizing Durand-Kerner; the input must have nonzero leading
// coefficient and, for reliable convergence, simple roots (callers split off
// square factors exactly first).
template <class C>
std::vector<C> polynomial_roots(std::vector<C> coeffs, int max_iters = 400);

// Roots of the field's minimal polynomial, ordered lexicographically by
// (real, imaginary); PrecisionError when two roots are too close to separate.
template <class C>
std::vector<C> field_roots(const FieldPtr& field);

template <class C>
C embed_element(const FieldElement& a, const C& root);

template <class C>
std::vector<C> embed_poly(const Polynomial& p, const C& root);

// Public fixed-precision embedding (the exactnum "embed" operation).
using EmbedComplex = Cplx80;
EmbedComplex embed(const FieldElement& a, int root_index, int precision_bits);

}  // namespace belyi

#endif
