#ifndef BELYI_BELYI0_HPP
#define BELYI_BELYI0_HPP

#include <string>
#include <vector>

#include "belyi/passport.hpp"
#include "belyi/ratfun.hpp"

namespace belyi {

enum class FiberValue { Zero, One, Inf };

// One squarefree piece of a fiber: every root of `factor` lies in the fiber
// with ramification index `multiplicity`.
struct FiberPiece {
  Polynomial factor;  // monic squarefree
  int multiplicity = 0;
};

// Fiber of a rational map over 0, 1 or infinity, with the point at infinity
// carried separately (multiplicity 0 when absent).
struct FiberDecomposition {
  std::vector<FiberPiece> pieces;
  int inf_multiplicity = 0;

  std::vector<int> entries() const;
  long total() const;
};

FiberDecomposition fiber_pieces(const RationalFunction& map, FiberValue value);

// Multiset of ramification indices in the fiber (includes the infinite point).
std::vector<int> fiber_structure(const RationalFunction& map, FiberValue value);

BranchingPassport passport(const RationalFunction& map);

struct Belyi0Report {
  BranchingPassport passport;
  bool is_belyi = false;
  long degree = 0;
  long ramification_sum = 0;  // sum (e-1) over the three fibers
  long required = 0;          // 2d-2
};

// Riemann-Hurwitz count: the map is Belyi iff the three fibers account for
// all 2d-2 ramification.
Belyi0Report verify_belyi0(const RationalFunction& map);

// A genus-0 Belyi map with its verified passport.
struct Genus0BelyiMap {
  RationalFunction map;
  BranchingPassport passport;
};

Genus0BelyiMap make_genus0(const RationalFunction& map);

}  // namespace belyi

#endif
