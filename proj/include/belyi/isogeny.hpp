#ifndef BELYI_ISOGENY_HPP
#define BELYI_ISOGENY_HPP

#include <optional>

#include "belyi/composer.hpp"

namespace belyi {

// Explicit isogeny data: x-component u (target coordinate as a function of
// the source coordinate) and, when printed, the y-multiplier R with
// Y = y R(x).  The defining identity is f_source * R^n = g_target(u).
struct IsogenyMap {
  SuperellipticCurve source;
  SuperellipticCurve target;
  RationalFunction u;
  std::optional<RationalFunction> R;
  int degree = 0;
};

struct IsogenyCheck {
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct IsogenyReport {
  std::vector<IsogenyCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// Checks (1) f R^n = g(u) exactly, (2) infinity maps to infinity,
// (3) the stated degree.
IsogenyReport verify_isogeny_full(const IsogenyMap& iso);

struct XOnlyResult {
  bool ok = false;
  FieldElement c;            // g(u)/f = c * R^n
  RationalFunction R;        // monic-over-monic n-th root
  bool c_is_nth_power = false;   // over the working field
  std::optional<FieldElement> c_root;  // present when c is an n-th power
};

// Recovers R and the constant c from the x-component alone; when c is not an
// n-th power in the working field the full isogeny needs a field extension.
XOnlyResult verify_isogeny_xonly(const Polynomial& f_source, const Polynomial& g_target,
                                 const RationalFunction& u, int n);

// Pullback of a genus-1 Belyi map through a verified isogeny: X -> u(x),
// Y -> y R(x); the passport is the base passport repeated degree times.
Genus1BelyiMap compose_isogeny(const Genus1BelyiMap& base, const IsogenyMap& iso);

}  // namespace belyi

#endif
