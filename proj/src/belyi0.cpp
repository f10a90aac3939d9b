#include "belyi/belyi0.hpp"

namespace belyi {

std::vector<int> FiberDecomposition::entries() const {
  std::vector<int> out;
  for (const auto& p : pieces)
    for (int i = 0; i < p.factor.degree(); ++i) out.push_back(p.multiplicity);
  if (inf_multiplicity > 0) out.push_back(inf_multiplicity);
  std::sort(out.rbegin(), out.rend());
  return out;
}

long FiberDecomposition::total() const {
  long t = inf_multiplicity;
  for (const auto& p : pieces) t += static_cast<long>(p.factor.degree()) * p.multiplicity;
  return t;
}

FiberDecomposition fiber_pieces(const RationalFunction& map, FiberValue value) {
  if (map.is_constant())
    fail(ErrorKind::InvalidInput, "fiber structure of a constant map");
  const int d = map.degree();
  Polynomial target;
  switch (value) {
    case FiberValue::Zero: target = map.num(); break;
    case FiberValue::Inf: target = map.den(); break;
    case FiberValue::One: target = map.num() - map.den(); break;
  }
  FiberDecomposition out;
  if (target.is_zero())
    fail(ErrorKind::InvalidInput, "map is constant 1");
  if (target.degree() > 0) {
    auto dec = squarefree_decompose(target);
    for (const auto& part : dec.parts) out.pieces.push_back({part.factor, part.multiplicity});
  }
  int gap = d - target.degree();
  if (gap > 0) out.inf_multiplicity = gap;
  return out;
}

std::vector<int> fiber_structure(const RationalFunction& map, FiberValue value) {
  return fiber_pieces(map, value).entries();
}

BranchingPassport passport(const RationalFunction& map) {
  BranchingPassport p;
  p.over_inf = fiber_structure(map, FiberValue::Inf);
  p.over_zero = fiber_structure(map, FiberValue::Zero);
  p.over_one = fiber_structure(map, FiberValue::One);
  return p;
}

Belyi0Report verify_belyi0(const RationalFunction& map) {
  Belyi0Report rep;
  rep.passport = passport(map);
  rep.degree = map.degree();
  rep.ramification_sum = rep.passport.ramification_sum();
  rep.required = 2 * rep.degree - 2;
  rep.is_belyi = rep.passport.fiber_sums_match() && rep.ramification_sum == rep.required;
  return rep;
}

Genus0BelyiMap make_genus0(const RationalFunction& map) {
  Belyi0Report rep = verify_belyi0(map);
  if (!rep.is_belyi)
    fail(ErrorKind::NotBelyi, "map has critical values outside {0,1,inf} (deficit " +
                                  std::to_string(rep.required - rep.ramification_sum) + ")");
  return {map, rep.passport};
}

}  // namespace belyi
