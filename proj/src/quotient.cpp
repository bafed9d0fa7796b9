#include "mdlmon/quotient.hpp"

#include <stdexcept>

namespace mdlmon {

RunPrefix::RunPrefix(std::vector<TimedState> states) {
  for (auto& s : states) append(std::move(s));
}

void RunPrefix::append(TimedState s) {
  if (states_.empty()) {
    if (!s.time.is_zero()) throw std::invalid_argument("a run starts at time 0");
  } else if (!(states_.back().time < s.time)) {
    throw std::invalid_argument("run timestamps must be strictly increasing");
  }
  states_.push_back(std::move(s));
}

const TimedState& RunPrefix::timed_state_at(const Rational& u) const {
  if (states_.empty() || u < states_.front().time) {
    throw std::invalid_argument("time before the start of the run");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < states_.size(); ++i) {
    if (states_[i].time <= u) best = i;
  }
  return states_[best];
}

std::uint32_t RunPrefix::max_prop_index() const {
  std::uint32_t m = 0;
  for (const auto& s : states_) {
    for (const auto& p : s.state) m = std::max(m, p.index);
  }
  return m;
}

namespace {

// t' < x - z, encoded as a refuted non-strict atom.
MdlFormula after_window(VarId x, const Rational& tp) {
  return MdlFormula::diff(x, kZeroVar, Bound{tp, false}, /*refuted=*/true);
}

// The replacement for an asserted P_j(x) under the pair ((s,t),(s',t')).
MdlFormula case_expression(bool in_prev, bool in_next, const Rational& t, const Rational& tp, PredId j,
                           VarId x) {
  MdlFormula tail = MdlFormula::conj(after_window(x, tp), MdlFormula::pred(j, x));
  if (!in_prev && !in_next) {  // (I)
    return tail;
  }
  if (!in_prev && in_next) {  // (II): x-z = t'
    MdlFormula at_tp = MdlFormula::conj(MdlFormula::diff(x, kZeroVar, Bound{tp, false}),
                                        MdlFormula::diff(kZeroVar, x, Bound{-tp, false}));
    return MdlFormula::disj(std::move(at_tp), std::move(tail));
  }
  MdlFormula lower = MdlFormula::diff(kZeroVar, x, Bound{-t, false});  // t <= x-z
  if (in_prev && !in_next) {  // (III): t <= x-z < t'
    MdlFormula window = MdlFormula::conj(std::move(lower), MdlFormula::diff(x, kZeroVar, Bound{tp, true}));
    return MdlFormula::disj(std::move(window), std::move(tail));
  }
  // (IV): t <= x-z <= t'
  MdlFormula window = MdlFormula::conj(std::move(lower), MdlFormula::diff(x, kZeroVar, Bound{tp, false}));
  return MdlFormula::disj(std::move(window), std::move(tail));
}

MdlFormula substitute_predicates(const MdlFormula& phi, const TimedState& prev, const TimedState& next) {
  switch (phi.kind()) {
    case MdlKind::Pred: {
      PredId j = phi.pred_id();
      MdlFormula replacement =
          case_expression(prev.has(j.prop()), next.has(j.prop()), prev.time, next.time, j, phi.pred_var());
      // A refuted occurrence receives the positive-form negation of the same
      // case expression.
      if (phi.pred_negated()) return to_positive_form(MdlFormula::neg(replacement));
      return replacement;
    }
    case MdlKind::Diff:
    case MdlKind::BoolConst:
      return phi;
    case MdlKind::And:
      return MdlFormula::conj(substitute_predicates(phi.child(0), prev, next),
                              substitute_predicates(phi.child(1), prev, next));
    case MdlKind::Or:
      return MdlFormula::disj(substitute_predicates(phi.child(0), prev, next),
                              substitute_predicates(phi.child(1), prev, next));
    case MdlKind::Not:
      throw std::invalid_argument("quotient requires positive form");
    case MdlKind::Forall:
      return MdlFormula::forall(phi.quant_var(), substitute_predicates(phi.child(0), prev, next));
    case MdlKind::Exists:
      return MdlFormula::exists(phi.quant_var(), substitute_predicates(phi.child(0), prev, next));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

MdlFormula quotient_step(const MdlFormula& phi, const TimedState& prev, const TimedState& next) {
  if (!(prev.time < next.time)) throw std::invalid_argument("quotient requires increasing timestamps");
  return substitute_predicates(phi, prev, next);
}

MdlFormula quotient_prefix(const MdlFormula& phi, const RunPrefix& prefix) {
  if (prefix.size() < 2) throw std::invalid_argument("quotient over a prefix needs at least two states");
  MdlFormula out = phi;
  for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
    out = quotient_step(out, prefix[i], prefix[i + 1]);
  }
  return out;
}

namespace {

MdlFormula initial_case(bool in_s0, PredId j, VarId x) {
  MdlFormula at_zero = MdlFormula::conj(MdlFormula::diff(x, kZeroVar, Bound{Rational(0), false}),
                                        MdlFormula::diff(kZeroVar, x, Bound{Rational(0), false}));
  MdlFormula now = MdlFormula::conj(std::move(at_zero), MdlFormula::bool_const(in_s0));
  MdlFormula later = MdlFormula::conj(MdlFormula::diff(x, kZeroVar, Bound{Rational(0), false}, /*refuted=*/true),
                                      MdlFormula::pred(j, x));
  return MdlFormula::disj(std::move(now), std::move(later));
}

}  // namespace

MdlFormula initial_point_substitution(const MdlFormula& phi, const std::set<PropId>& s0) {
  switch (phi.kind()) {
    case MdlKind::Pred: {
      MdlFormula replacement = initial_case(s0.count(phi.pred_id().prop()) != 0, phi.pred_id(), phi.pred_var());
      if (phi.pred_negated()) return to_positive_form(MdlFormula::neg(replacement));
      return replacement;
    }
    case MdlKind::Diff:
    case MdlKind::BoolConst:
      return phi;
    case MdlKind::And:
      return MdlFormula::conj(initial_point_substitution(phi.child(0), s0),
                              initial_point_substitution(phi.child(1), s0));
    case MdlKind::Or:
      return MdlFormula::disj(initial_point_substitution(phi.child(0), s0),
                              initial_point_substitution(phi.child(1), s0));
    case MdlKind::Not:
      throw std::invalid_argument("initial substitution requires positive form");
    case MdlKind::Forall:
      return MdlFormula::forall(phi.quant_var(), initial_point_substitution(phi.child(0), s0));
    case MdlKind::Exists:
      return MdlFormula::exists(phi.quant_var(), initial_point_substitution(phi.child(0), s0));
  }
  throw std::logic_error("unreachable");
}

bool consistent_with(const TimedState& prev, const TimedState& next, const IntervalUnion& S, PredId j) {
  if (!(prev.time < next.time)) throw std::invalid_argument("consistency requires increasing timestamps");
  if (S.contains(next.time) != next.has(j.prop())) return false;
  IntervalUnion window{Interval::right_open(prev.time, next.time)};
  IntervalUnion overlap = window.intersect(S);
  if (prev.has(j.prop())) return overlap == window;
  return overlap.empty();
}

}  // namespace mdlmon
