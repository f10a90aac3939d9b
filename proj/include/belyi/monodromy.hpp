#ifndef BELYI_MONODROMY_HPP
#define BELYI_MONODROMY_HPP

#include <complex>

#include "belyi/composer.hpp"
#include "belyi/numeric.hpp"

namespace belyi {

struct NumericSettings {
  int precision_bits = 128;
  double cluster_tol = 1e-9;  // relative
  int path_steps = 64;        // initial subdivision per path segment
  std::complex<double> base_point{0.5, 0.25};
  int embedding_index = 0;
};

// Permutations are 0-based; the product convention is left-to-right
// application, so sigma0 * sigma1 * sigmaInf = id means
// sigmaInf(sigma1(sigma0(p))) = p for every sheet p.
struct PermutationTriple {
  int degree = 0;
  std::vector<int> sigma0, sigma1, sigma_inf;

  bool product_is_identity() const;
  bool transitive() const;
};

std::vector<int> cycle_type(const std::vector<int>& sigma);  // descending
int genus_from_triple(const PermutationTriple& t);
// Simultaneous conjugacy, exact search seeded by transitivity.
bool triples_equivalent(const PermutationTriple& a, const PermutationTriple& b);

PermutationTriple permutation_triple(const RationalFunction& map,
                                     const NumericSettings& settings);
PermutationTriple permutation_triple(const Genus1BelyiMap& map,
                                     const NumericSettings& settings);

// Passport read off the triple (cycle types over inf, 0, 1).
BranchingPassport passport_of_triple(const PermutationTriple& t);

struct CriticalValues {
  std::vector<std::complex<double>> finite;  // clustered representatives
  bool at_infinity = false;
};

CriticalValues critical_values_numeric(const RationalFunction& map,
                                       const NumericSettings& settings);
CriticalValues critical_values_numeric(const Genus1BelyiMap& map,
                                       const NumericSettings& settings);

}  // namespace belyi

#endif
