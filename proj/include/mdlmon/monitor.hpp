#pragma once

#include <optional>
#include <set>
#include <vector>

#include "mdlmon/btl.hpp"
#include "mdlmon/mdl.hpp"
#include "mdlmon/quotient.hpp"

namespace mdlmon {

enum class VerdictState { Undetermined, Fulfilled, Failed };
enum class VerdictSource { Initial, Event, Timer };

struct Verdict {
  VerdictState state = VerdictState::Undetermined;
  Rational time;
  VerdictSource source = VerdictSource::Initial;

  bool decided() const { return state != VerdictState::Undetermined; }
};

std::string to_string(VerdictState s);
std::string to_string(VerdictSource s);

/// Earliest t' >= t at which the formula becomes a tautology when the state
/// does not change; nullopt when no such time exists ("infinity"). Searched
/// over a candidate grid of sums/differences of at most two formula constants
/// offset from t, refined by midpoints; best effort, validated against a
/// fine-grid reference in the tests.
std::optional<Rational> compute_ett(const MdlFormula& phi, const std::set<PropId>& s, const Rational& t);

/// Dual of compute_ett for unsatisfiability.
std::optional<Rational> compute_eut(const MdlFormula& phi, const std::set<PropId>& s, const Rational& t);

/// The online verification loop: holds the translated formula in positive
/// form, folds each observed timed state into it by quotienting, and decides
/// fulfillment/violation via the two constant substitutions checked on
/// decision diagrams. One instance consumes one run; feeds must be ordered.
class Monitor {
public:
  Monitor(const BtlFormula& psi, std::set<PropId> s0);

  const Verdict& verdict() const { return verdict_; }
  bool decided() const { return verdict_.decided(); }
  const MdlFormula& formula() const { return phi_; }
  const Rational& time() const { return t_; }
  const std::set<PropId>& state() const { return s_; }

  /// Feeds the next observed timed state. Returns the verdict snapshot for
  /// this event (Undetermined snapshots carry the event time).
  Verdict feed(const TimedState& next);

  /// Like feed, but first injects synthetic timed states at the earliest
  /// decision timepoint whenever it precedes the next event (or the end of
  /// the trace, when next is nullopt). Returns one verdict snapshot per
  /// injected timer state plus one for the event itself.
  std::vector<Verdict> feed_timed(const std::optional<TimedState>& next);

private:
  Verdict advance(const TimedState& next, VerdictSource source);
  void refresh_verdict(const Rational& at, VerdictSource source);

  MdlFormula phi_;
  std::set<PropId> s_;
  Rational t_;
  Verdict verdict_;
};

}  // namespace mdlmon
