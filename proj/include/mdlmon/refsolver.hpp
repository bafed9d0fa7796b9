#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mdlmon/btl.hpp"
#include "mdlmon/interval.hpp"
#include "mdlmon/mdl.hpp"
#include "mdlmon/quotient.hpp"

namespace mdlmon {

enum class ThreeValued { False, Unknown, True };

std::string to_string(ThreeValued v);

using Valuation = std::map<VarId, Rational>;

/// Interpretation of the monadic predicates: entry j-1 is the set for P_j.
using MonadicSets = std::vector<IntervalUnion>;

/// The sets of time points on which each proposition holds, read off a run
/// prefix under the convention that the last state persists through the
/// horizon. Entry j-1 covers P_j up to at least min_props predicates.
MonadicSets monadic_sets(const RunPrefix& prefix, const Rational& horizon, std::uint32_t min_props = 0);

/// Exact satisfaction of an MDL formula. Quantifiers range over the
/// non-negative reals and are decided by sampling a finite breakpoint grid:
/// the interval endpoints of S and the values of already-bound variables,
/// each offset by signed sums of at most d atom constants (d = remaining
/// quantifier depth), plus midpoints and a point beyond each extreme.
bool eval_mdl(const MdlFormula& phi, const Valuation& v, const MonadicSets& S);

/// Like eval_mdl but with extra midpoint-density: used to validate that the
/// sampling grid is saturated.
bool eval_mdl_dense(const MdlFormula& phi, const Valuation& v, const MonadicSets& S);

/// Three-valued run evaluation at time u: True/False when the prefix
/// determines the value given that no further events occur before the
/// horizon, Unknown otherwise. Computed from truth interval-unions per
/// subformula over [0, horizon].
ThreeValued eval_btl(const RunPrefix& prefix, const Rational& horizon, const Rational& u, const BtlFormula& psi);

/// A difference constraint x - y (<|<=) c in positive reading.
struct Constraint {
  VarId x;
  VarId y;
  Bound bound;

  bool operator==(const Constraint&) const = default;
  std::string to_string() const;
};

/// The complement constraint: not (x - y <= c) is y - x < -c.
Constraint complement(const Constraint& c);

/// True unless the constraint is a self-difference that fails (x-x < 0 etc).
bool trivially_true(const Constraint& c);
bool is_self(const Constraint& c);

/// Fourier-Motzkin elimination of x from a conjunction: pairs every upper
/// bound on x with every lower bound (strictness or-ed), drops atoms naming
/// x, drops vacuous self-residues, keeps contradictory ones.
std::vector<Constraint> fm_eliminate(VarId x, const std::vector<Constraint>& atoms);

/// Feasibility of a conjunction, by eliminating every variable.
bool constraints_feasible(std::vector<Constraint> atoms);

enum class Decision { Valid, Unsatisfiable, Contingent };

std::string to_string(Decision d);

/// Exact decision for predicate-free formulas over unconstrained reals:
/// recursive DNF with fm_eliminate per quantifier (universal quantifiers via
/// negation). Free variables are allowed.
Decision decide_dl(const MdlFormula& phi);

/// Satisfiability half of decide_dl, exposed for tests.
bool dl_satisfiable(const MdlFormula& phi);

}  // namespace mdlmon
