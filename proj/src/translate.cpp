#include "mdlmon/translate.hpp"

namespace mdlmon {

namespace {

// 0 <= y - x
MdlFormula at_or_after(VarId x, VarId y) {
  return MdlFormula::diff(x, y, Bound{Rational(0), false});
}

// y - x <= c
MdlFormula within(VarId y, VarId x, const Rational& c) {
  return MdlFormula::diff(y, x, Bound{c, false});
}

// y - x < c
MdlFormula strictly_within(VarId y, VarId x, const Rational& c) {
  return MdlFormula::diff(y, x, Bound{c, true});
}

// y - x = c, as two opposing non-strict atoms
MdlFormula exactly_at(VarId y, VarId x, const Rational& c) {
  return MdlFormula::conj(within(y, x, c), MdlFormula::diff(x, y, Bound{-c, false}));
}

MdlFormula implies(MdlFormula guard, MdlFormula body) {
  return MdlFormula::disj(MdlFormula::neg(std::move(guard)), std::move(body));
}

}  // namespace

MdlFormula translate(const BtlFormula& psi, VarId x, VarSupply& supply) {
  switch (psi.kind()) {
    case BtlKind::Prop:
      return MdlFormula::pred(PredId(psi.prop_id()), x);
    case BtlKind::And:
      return MdlFormula::conj(translate(psi.child(0), x, supply), translate(psi.child(1), x, supply));
    case BtlKind::Or:
      return MdlFormula::disj(translate(psi.child(0), x, supply), translate(psi.child(1), x, supply));
    case BtlKind::Not:
      return MdlFormula::neg(translate(psi.child(0), x, supply));
    case BtlKind::Implies:
      return implies(translate(psi.child(0), x, supply), translate(psi.child(1), x, supply));
    case BtlKind::Iff: {
      MdlFormula a = translate(psi.child(0), x, supply);
      MdlFormula b = translate(psi.child(1), x, supply);
      return MdlFormula::conj(implies(a, b), implies(b, a));
    }
    case BtlKind::Always: {
      VarId y = supply.fresh();
      MdlFormula guard = MdlFormula::conj(at_or_after(x, y), within(y, x, psi.bound()));
      return MdlFormula::forall(y, implies(std::move(guard), translate(psi.child(0), y, supply)));
    }
    case BtlKind::Eventually: {
      VarId y = supply.fresh();
      MdlFormula guard = MdlFormula::conj(at_or_after(x, y), within(y, x, psi.bound()));
      return MdlFormula::exists(y, MdlFormula::conj(std::move(guard), translate(psi.child(0), y, supply)));
    }
    case BtlKind::AlwaysUnbounded: {
      VarId y = supply.fresh();
      return MdlFormula::forall(y, implies(at_or_after(x, y), translate(psi.child(0), y, supply)));
    }
    case BtlKind::After: {
      // exists a witness at least c after x (conjunctive reading, like the
      // other existential modalities)
      VarId y = supply.fresh();
      MdlFormula guard = MdlFormula::diff(x, y, Bound{-psi.bound(), false});  // c <= y - x
      return MdlFormula::exists(y, MdlFormula::conj(std::move(guard), translate(psi.child(0), y, supply)));
    }
    case BtlKind::Between: {
      VarId y = supply.fresh();
      MdlFormula guard = MdlFormula::conj(MdlFormula::diff(x, y, Bound{-psi.bound(), false}),
                                          within(y, x, psi.upper_bound()));
      return MdlFormula::exists(y, MdlFormula::conj(std::move(guard), translate(psi.child(0), y, supply)));
    }
    case BtlKind::UntilExact: {
      VarId y = supply.fresh();
      MdlFormula hold_guard = MdlFormula::conj(at_or_after(x, y), strictly_within(y, x, psi.bound()));
      MdlFormula hold = MdlFormula::forall(y, implies(std::move(hold_guard), translate(psi.child(0), y, supply)));
      VarId u = supply.fresh();
      MdlFormula hit =
          MdlFormula::forall(u, implies(exactly_at(u, x, psi.bound()), translate(psi.child(1), u, supply)));
      return MdlFormula::conj(std::move(hold), std::move(hit));
    }
    case BtlKind::Until: {
      VarId y = supply.fresh();
      MdlFormula goal = translate(psi.child(1), y, supply);
      VarId u = supply.fresh();
      MdlFormula before = MdlFormula::conj(at_or_after(x, u), strictly_within(u, y, Rational(0)));
      MdlFormula hold = MdlFormula::forall(u, implies(std::move(before), translate(psi.child(0), u, supply)));
      return MdlFormula::exists(
          y, MdlFormula::conj(at_or_after(x, y), MdlFormula::conj(std::move(goal), std::move(hold))));
    }
  }
  throw std::logic_error("unreachable");
}

MdlFormula translate_z(const BtlFormula& psi) {
  VarSupply supply;
  return translate(psi, kZeroVar, supply);
}

MdlFormula translate_positive(const BtlFormula& psi) { return to_positive_form(translate_z(psi)); }

}  // namespace mdlmon
