#ifndef BELYI_HYPERGEO_HPP
#define BELYI_HYPERGEO_HPP

#include <complex>
#include <vector>

#include "belyi/numeric.hpp"
#include "belyi/rational.hpp"

namespace belyi {

using HC = Cplx40;
using HR = HC::value_type;

struct HpgParams {
  Rational a, b, c;
  HC z;
};

// Power series inside |z| <= 0.75; c must not be a non-positive integer.
HC hpg2f1(const HpgParams& p, int precision_bits = 128);

// Elliptic-integral representations (compactified, adaptive Gauss rules):
//   F(1/2,1/4;5/4;z)  =  z^(-1/4) * int_0^{z^(1/4)} dt / sqrt(1 - t^4)
//   F(1/2,1/6;7/6;z)  =  z^(-1/6) * int_0^{z^(1/6)} dt / sqrt(1 - t^6)
//   F(1/3,2/3;4/3;z)  =  z^(-1/3) * int_0^{z^(1/9)} 3 t^2 (1 - t^9)^(-2/3) dt
HC integral_quarter_lattice(const HC& z);
HC integral_sixth_lattice(const HC& z);
HC integral_third_lattice(const HC& z);

// F(1/2,1/4;5/4;z) as int_0^1 ds / sqrt(1 - s^4 z): converges for z off the
// ray [1, inf), used to evaluate transformed arguments outside the series
// disc.
HC hpg2f1_quarter_continued(const HC& z);

struct IdentitySample {
  HC z;
  HC transformed;
  bool accepted = false;
  double residual = 0.0;
};

struct IdentityCheckResult {
  std::vector<IdentitySample> samples;
  double max_residual = 0.0;
  int accepted = 0;
  int rejected = 0;
};

// The degree-5 CM transformation of F(1/2,1/4;5/4;.): samples with the
// transformed argument outside the series disc are evaluated through the
// integral when |z| <= 0.105 and rejected otherwise.
IdentityCheckResult verify_isogeny_identity_deg5(const std::vector<HC>& z_samples);

std::vector<HC> default_identity_samples();

}  // namespace belyi

#endif
