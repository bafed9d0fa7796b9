#include "mdlmon/monitor.hpp"

#include <algorithm>
#include <stdexcept>

#include "mdlmon/ddd.hpp"
#include "mdlmon/translate.hpp"

namespace mdlmon {

std::string to_string(VerdictState s) {
  switch (s) {
    case VerdictState::Undetermined:
      return "undetermined";
    case VerdictState::Fulfilled:
      return "fulfilled";
    case VerdictState::Failed:
      return "failed";
  }
  return "?";
}

std::string to_string(VerdictSource s) {
  switch (s) {
    case VerdictSource::Initial:
      return "initial";
    case VerdictSource::Event:
      return "event";
    case VerdictSource::Timer:
      return "timer";
  }
  return "?";
}

namespace {

bool zero_subst_taut(const MdlFormula& phi) {
  DddManager m;
  return m.is_taut(m.build_closed(literal_substitute(phi, false)));
}

bool one_subst_unsat(const MdlFormula& phi) {
  DddManager m;
  return m.is_unsat(m.build_closed(literal_substitute(phi, true)));
}

// Candidate timepoints for the earliest-decision search: t plus signed sums
// of at most two formula constants, within [t, t + 2*maxconst], refined with
// one midpoint per consecutive pair.
std::vector<Rational> decision_candidates(const MdlFormula& phi, const Rational& t) {
  std::set<Rational> consts;
  for (const auto& c : atom_constants(phi)) {
    Rational a = abs(c);
    if (!a.is_zero()) consts.insert(a);
  }
  if (consts.empty()) return {};
  Rational span = *consts.rbegin() * Rational(2);

  std::set<Rational> offsets;
  for (const auto& a : consts) {
    offsets.insert(a);
    for (const auto& b : consts) {
      offsets.insert(a + b);
      if (a > b) offsets.insert(a - b);
      if (b > a) offsets.insert(b - a);
    }
  }
  std::set<Rational> grid;
  for (const auto& o : offsets) {
    if (!(o > Rational(0)) || o > span) continue;
    grid.insert(t + o);
  }
  std::vector<Rational> sorted(grid.begin(), grid.end());
  // One midpoint per consecutive pair, including the pair (t, first).
  std::vector<Rational> out;
  Rational prev = t;
  for (const auto& g : sorted) {
    out.push_back((prev + g) / Rational(2));
    out.push_back(g);
    prev = g;
  }
  return out;
}

std::optional<Rational> earliest(const MdlFormula& phi, const std::set<PropId>& s, const Rational& t,
                                 bool (*decided)(const MdlFormula&)) {
  if (decided(phi)) return t;
  TimedState here{s, t};
  for (const auto& cand : decision_candidates(phi, t)) {
    if (decided(quotient_step(phi, here, TimedState{s, cand}))) return cand;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Rational> compute_ett(const MdlFormula& phi, const std::set<PropId>& s, const Rational& t) {
  return earliest(phi, s, t, &zero_subst_taut);
}

std::optional<Rational> compute_eut(const MdlFormula& phi, const std::set<PropId>& s, const Rational& t) {
  return earliest(phi, s, t, &one_subst_unsat);
}

Monitor::Monitor(const BtlFormula& psi, std::set<PropId> s0)
    : phi_(initial_point_substitution(translate_positive(psi), s0)), s_(std::move(s0)), t_(0) {
  verdict_ = Verdict{VerdictState::Undetermined, t_, VerdictSource::Initial};
  refresh_verdict(t_, VerdictSource::Initial);
}

void Monitor::refresh_verdict(const Rational& at, VerdictSource source) {
  if (verdict_.decided()) return;
  if (zero_subst_taut(phi_)) {
    verdict_ = Verdict{VerdictState::Fulfilled, at, source};
  } else if (one_subst_unsat(phi_)) {
    verdict_ = Verdict{VerdictState::Failed, at, source};
  }
}

Verdict Monitor::advance(const TimedState& next, VerdictSource source) {
  if (verdict_.decided()) throw std::logic_error("monitor already reached a verdict");
  if (!(t_ < next.time)) throw std::invalid_argument("timed states must arrive in strictly increasing order");
  phi_ = quotient_step(phi_, TimedState{s_, t_}, next);
  s_ = next.state;
  t_ = next.time;
  refresh_verdict(t_, source);
  if (verdict_.decided()) return verdict_;
  return Verdict{VerdictState::Undetermined, t_, source};
}

Verdict Monitor::feed(const TimedState& next) { return advance(next, VerdictSource::Event); }

std::vector<Verdict> Monitor::feed_timed(const std::optional<TimedState>& next) {
  std::vector<Verdict> out;
  std::size_t budget = 0;
  bool budget_set = false;
  while (!verdict_.decided()) {
    std::optional<Rational> ett = compute_ett(phi_, s_, t_);
    std::optional<Rational> eut = compute_eut(phi_, s_, t_);
    std::optional<Rational> et;
    if (ett && eut) {
      et = min(*ett, *eut);
    } else {
      et = ett ? ett : eut;
    }
    if (!et || (next && !(*et < next->time)) || !(t_ < *et)) break;
    if (!budget_set) {
      // Repeated injections within one step are capped by the size of the
      // candidate grid examined at the first injection.
      budget = std::max<std::size_t>(1, decision_candidates(phi_, t_).size());
      budget_set = true;
    }
    if (budget == 0) break;
    --budget;
    out.push_back(advance(TimedState{s_, *et}, VerdictSource::Timer));
  }
  if (next && !verdict_.decided()) out.push_back(advance(*next, VerdictSource::Event));
  return out;
}

}  // namespace mdlmon
