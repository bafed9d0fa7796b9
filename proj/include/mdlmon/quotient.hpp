#pragma once

#include <set>
#include <vector>

#include "mdlmon/interval.hpp"
#include "mdlmon/mdl.hpp"

namespace mdlmon {

/// One element of a timed run: the set of propositions holding from this
/// event until the next, stamped with the event time.
struct TimedState {
  std::set<PropId> state;
  Rational time;

  bool has(PropId p) const { return state.count(p) != 0; }
};

/// Finite prefix of a timed run: first time 0, strictly increasing times.
class RunPrefix {
public:
  RunPrefix() = default;
  explicit RunPrefix(std::vector<TimedState> states);

  void append(TimedState s);

  std::size_t size() const { return states_.size(); }
  bool empty() const { return states_.empty(); }
  const TimedState& operator[](std::size_t i) const { return states_.at(i); }
  const TimedState& back() const { return states_.back(); }
  auto begin() const { return states_.begin(); }
  auto end() const { return states_.end(); }

  /// The timed state in effect at time u: the element with the largest
  /// timestamp <= u.
  const TimedState& timed_state_at(const Rational& u) const;

  std::uint32_t max_prop_index() const;

private:
  std::vector<TimedState> states_;
};

/// Folds one observed interval into the formula: every predicate occurrence
/// is replaced by a case expression selected by membership of its proposition
/// in prev/next state. Pre: phi in positive form, prev.time < next.time.
/// The result is again in positive form.
MdlFormula quotient_step(const MdlFormula& phi, const TimedState& prev, const TimedState& next);

/// Left fold of quotient_step over consecutive pairs. Pre: prefix.size() >= 2.
MdlFormula quotient_prefix(const MdlFormula& phi, const RunPrefix& prefix);

/// Folds knowledge of the state at the single point t=0 into the formula:
/// P_j(x) becomes (x-z=0 and p_j-in-s0) or (0<x-z and P_j(x)). Used for the
/// verdict checks before any interval has been observed.
MdlFormula initial_point_substitution(const MdlFormula& phi, const std::set<PropId>& s0);

/// Whether the pair (prev, next) is consistent with S as the interpretation
/// of predicate j: membership on [prev.time, next.time) matches prev.state
/// and membership at next.time matches next.state.
bool consistent_with(const TimedState& prev, const TimedState& next, const IntervalUnion& S, PredId j);

}  // namespace mdlmon
