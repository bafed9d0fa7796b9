#include <numeric>

#include "doctest.h"
#include "gen.hpp"
#include "mdlmon/ddd.hpp"
#include "mdlmon/parse.hpp"
#include "mdlmon/refsolver.hpp"

using namespace mdlmon;

namespace {

const VarId vx(1), vy(2);

RunPrefix two_prop_run() {
  return RunPrefix{{TimedState{{PropId(1)}, Rational(0)},
                    TimedState{{PropId(1), PropId(2)}, Rational(4)},
                    TimedState{{PropId(2)}, Rational(7)},
                    TimedState{{PropId(1)}, Rational(10)}}};
}

// exists x. 0 <= x-z <= 8 and forall y. 0 <= y-x <= 3 ->
//   (4 <= y-z <= 7 or (7 < y-z and P2(y)))
MdlFormula settled_window_formula() {
  MdlFormula window = MdlFormula::conj(MdlFormula::diff(kZeroVar, vy, Bound{Rational(-4), false}),
                                       MdlFormula::diff(vy, kZeroVar, Bound{Rational(7), false}));
  MdlFormula tail = MdlFormula::conj(MdlFormula::diff(vy, kZeroVar, Bound{Rational(7), false}, true),
                                     MdlFormula::pred(PredId(2), vy));
  MdlFormula guard = MdlFormula::conj(MdlFormula::diff(vx, vy, Bound{Rational(0), false}),
                                      MdlFormula::diff(vy, vx, Bound{Rational(3), false}));
  MdlFormula body = MdlFormula::disj(MdlFormula::neg(guard), MdlFormula::disj(window, tail));
  MdlFormula range = MdlFormula::conj(MdlFormula::diff(kZeroVar, vx, Bound{Rational(0), false}),
                                      MdlFormula::diff(vx, kZeroVar, Bound{Rational(8), false}));
  return MdlFormula::exists(vx, MdlFormula::conj(range, MdlFormula::forall(vy, body)));
}

}  // namespace

TEST_CASE("monadic sets of the two-proposition run") {
  MonadicSets S = monadic_sets(two_prop_run(), Rational(12));
  REQUIRE(S.size() == 2);
  IntervalUnion s1;
  s1.add(Interval::right_open(Rational(0), Rational(7)));
  s1.add(Interval::closed(Rational(10), Rational(12)));
  IntervalUnion s2{Interval::right_open(Rational(4), Rational(10))};
  CHECK(S[0] == s1);
  CHECK(S[1] == s2);
}

TEST_CASE("monadic sets of single-state runs") {
  RunPrefix empty_run{{TimedState{{}, Rational(0)}}};
  MonadicSets S = monadic_sets(empty_run, Rational(5), 2);
  REQUIRE(S.size() == 2);
  CHECK(S[0].empty());
  CHECK(S[1].empty());

  RunPrefix one_prop{{TimedState{{PropId(1)}, Rational(0)}}};
  S = monadic_sets(one_prop, Rational(5));
  CHECK(S[0] == IntervalUnion{Interval::closed(Rational(0), Rational(5))});
}

TEST_CASE("run indexing picks the last event at or before u") {
  RunPrefix run = two_prop_run();
  CHECK(run.timed_state_at(Rational(3)).time == Rational(0));
  CHECK(run.timed_state_at(Rational(3)).state == std::set<PropId>{PropId(1)});
  CHECK(run.timed_state_at(Rational::parse("9.99")).time == Rational(7));
  CHECK(run.timed_state_at(Rational::parse("9.99")).state == std::set<PropId>{PropId(2)});
  CHECK(run.timed_state_at(Rational(10)).time == Rational(10));
}

TEST_CASE("mdl evaluation on point and set examples") {
  MonadicSets S = monadic_sets(two_prop_run(), Rational(12));
  // At time 3 the run satisfies p1.
  CHECK(eval_mdl(MdlFormula::pred(PredId(1), kZeroVar), {{kZeroVar, Rational(3)}}, S));
  CHECK_FALSE(eval_mdl(MdlFormula::pred(PredId(2), kZeroVar), {{kZeroVar, Rational(3)}}, S));
  // P1(z) with an empty set is false.
  CHECK_FALSE(eval_mdl(MdlFormula::pred(PredId(1), kZeroVar), {{kZeroVar, Rational(3)}}, MonadicSets{IntervalUnion{}}));
}

TEST_CASE("the settled-window formula is true under any interpretation of P2") {
  gen::Rng rng(99);
  MdlFormula phi = settled_window_formula();
  for (int i = 0; i < 25; ++i) {
    MonadicSets S{IntervalUnion{}, gen::random_interval_union(rng, Rational(15))};
    CHECK(eval_mdl(phi, {{kZeroVar, Rational(0)}}, S));
  }
}

TEST_CASE("three-valued run evaluation") {
  RunPrefix run = two_prop_run();
  CHECK(eval_btl(run, Rational(12), Rational(0), parse_btl("eventually[8] always[3] p2")) == ThreeValued::True);
  CHECK(eval_btl(run, Rational(12), Rational(0), parse_btl("p1")) == ThreeValued::True);
  CHECK(eval_btl(run, Rational(12), Rational(0), parse_btl("p2")) == ThreeValued::False);

  RunPrefix threes{{TimedState{{PropId(1)}, Rational(0)}, TimedState{{PropId(1)}, Rational(2)},
                    TimedState{{PropId(1)}, Rational(5)}}};
  CHECK(eval_btl(threes, Rational(10), Rational(0), parse_btl("always[100] p1")) == ThreeValued::Unknown);
  CHECK(eval_btl(threes, Rational(10), Rational(0), parse_btl("always[10] p1")) == ThreeValued::True);
  CHECK(eval_btl(threes, Rational(10), Rational(0), parse_btl("always !p1")) == ThreeValued::False);
}

TEST_CASE("three-valued evaluation of the added modalities") {
  RunPrefix run = two_prop_run();
  Rational H(12);
  CHECK(eval_btl(run, H, Rational(0), parse_btl("after[9] p1")) == ThreeValued::True);
  CHECK(eval_btl(run, H, Rational(0), parse_btl("after[9] p2")) == ThreeValued::Unknown);
  CHECK(eval_btl(run, H, Rational(0), parse_btl("between[5,6] p2")) == ThreeValued::True);
  CHECK(eval_btl(run, H, Rational(0), parse_btl("between[1,2] p2")) == ThreeValued::False);
  CHECK(eval_btl(run, H, Rational(0), parse_btl("p1 U p2")) == ThreeValued::True);
  CHECK(eval_btl(run, H, Rational(0), parse_btl("p2 U p1")) == ThreeValued::True);  // p1 holds at 0
  CHECK(eval_btl(run, H, Rational(5), parse_btl("p2 U[=2] p2")) == ThreeValued::True);
  CHECK(eval_btl(run, H, Rational(0), parse_btl("(p1 | p2) U (p1 & p2)")) == ThreeValued::True);
  CHECK(eval_btl(run, H, Rational(7), parse_btl("p2 U p1")) == ThreeValued::True);
  CHECK(eval_btl(run, H, Rational(0), parse_btl("p2 U[=2] p1")) == ThreeValued::False);
}

TEST_CASE("fourier-motzkin elimination examples") {
  // {x-z<=8, z-x<=0}: eliminating x leaves only a vacuous residue.
  std::vector<Constraint> a{{vx, kZeroVar, Bound{Rational(8), false}}, {kZeroVar, vx, Bound{Rational(0), false}}};
  CHECK(fm_eliminate(vx, a).empty());

  // {x-z<=0, z-x<0}: the residue z-z<0 is contradictory.
  std::vector<Constraint> b{{vx, kZeroVar, Bound{Rational(0), false}}, {kZeroVar, vx, Bound{Rational(0), true}}};
  auto residue = fm_eliminate(vx, b);
  REQUIRE(residue.size() == 1);
  CHECK(is_self(residue[0]));
  CHECK_FALSE(residue[0].bound.satisfied_by_zero());
  CHECK_FALSE(constraints_feasible(b));
}

TEST_CASE("elimination preserves feasibility and agrees with the cycle check") {
  gen::Rng rng(5150);
  std::vector<VarId> vars{kZeroVar, VarId(1), VarId(2), VarId(3)};
  for (int i = 0; i < 1000; ++i) {
    std::vector<Constraint> cons;
    std::vector<PathStep> steps;
    int n = gen::uniform(rng, 1, 6);
    for (int k = 0; k < n; ++k) {
      int a = gen::uniform(rng, 0, 3);
      int b = gen::uniform(rng, 0, 2);
      if (b >= a) ++b;
      Bound bound{gen::signed_const(rng), gen::coin(rng)};
      cons.push_back({vars[a], vars[b], bound});
      // The same constraint as a decision-path step (positive branch);
      // variable order inside the step does not matter for feasibility.
      if (vars[a] < vars[b]) {
        steps.push_back({NormAtom{vars[a], vars[b], bound}, true});
      } else {
        steps.push_back({NormAtom{vars[b], vars[a], Bound{-bound.value, !bound.strict}}, false});
      }
    }
    bool before = constraints_feasible(cons);
    VarId victim = vars[gen::uniform(rng, 1, 3)];
    bool after = constraints_feasible(fm_eliminate(victim, cons));
    CHECK(before == after);
    CHECK(before == path_feasible(steps));
  }
}

TEST_CASE("decision procedure on the stated examples") {
  // forall x. 0 | 0 is unsatisfiable and not valid.
  MdlFormula zeros = MdlFormula::forall(vx, MdlFormula::disj(MdlFormula::bool_const(false), MdlFormula::bool_const(false)));
  CHECK(decide_dl(zeros) == Decision::Unsatisfiable);

  // exists x. 0 <= x-z <= 8 is valid.
  MdlFormula cyl = MdlFormula::exists(vx, MdlFormula::conj(MdlFormula::diff(kZeroVar, vx, Bound{Rational(0), false}),
                                                           MdlFormula::diff(vx, kZeroVar, Bound{Rational(8), false})));
  CHECK(decide_dl(cyl) == Decision::Valid);

  // forall y. (0 <= y-x <= 3) -> (4 <= y-z <= 7), with x and z free, is contingent.
  MdlFormula guard = MdlFormula::conj(MdlFormula::diff(vx, vy, Bound{Rational(0), false}),
                                      MdlFormula::diff(vy, vx, Bound{Rational(3), false}));
  MdlFormula window = MdlFormula::conj(MdlFormula::diff(kZeroVar, vy, Bound{Rational(-4), false}),
                                       MdlFormula::diff(vy, kZeroVar, Bound{Rational(7), false}));
  MdlFormula impl = MdlFormula::forall(vy, MdlFormula::disj(MdlFormula::neg(guard), window));
  CHECK(decide_dl(impl) == Decision::Contingent);
}

TEST_CASE("doubling the sampling density never changes evaluation") {
  gen::Rng rng(31337);
  for (int i = 0; i < 500; ++i) {
    BtlFormula psi = gen::random_btl(rng, gen::uniform(rng, 1, 2), 2);
    MdlFormula phi = translate_z(psi);
    if (gen::coin(rng)) phi = to_positive_form(phi);
    MonadicSets S{gen::random_interval_union(rng, Rational(12)), gen::random_interval_union(rng, Rational(12))};
    Valuation v{{kZeroVar, Rational(gen::uniform(rng, 0, 10), 2)}};
    CHECK(eval_mdl(phi, v, S) == eval_mdl_dense(phi, v, S));
  }
}

namespace {

// Brute-force satisfiability over a rational grid: pitch is half the gcd of
// the constants, span is the sum of their magnitudes plus one.
Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t num = std::gcd(a.num() * b.den(), b.num() * a.den());
  return Rational(num, a.den() * b.den());
}

bool grid_eval(const MdlFormula& f, Valuation& v, const std::vector<Rational>& grid) {
  switch (f.kind()) {
    case MdlKind::Diff: {
      const DiffAtom& a = f.diff_atom();
      Rational d = v.at(a.x) - v.at(a.y);
      bool sat = a.bound.strict ? d < a.bound.value : d <= a.bound.value;
      return a.refuted ? !sat : sat;
    }
    case MdlKind::BoolConst:
      return f.const_value();
    case MdlKind::And:
      return grid_eval(f.child(0), v, grid) && grid_eval(f.child(1), v, grid);
    case MdlKind::Or:
      return grid_eval(f.child(0), v, grid) || grid_eval(f.child(1), v, grid);
    case MdlKind::Not:
      return !grid_eval(f.child(0), v, grid);
    case MdlKind::Forall:
    case MdlKind::Exists: {
      bool is_forall = f.kind() == MdlKind::Forall;
      for (const auto& g : grid) {
        v[f.quant_var()] = g;
        bool b = grid_eval(f.child(0), v, grid);
        v.erase(f.quant_var());
        if (is_forall && !b) return false;
        if (!is_forall && b) return true;
      }
      return is_forall;
    }
    default:
      throw std::logic_error("unexpected node in grid evaluation");
  }
}

bool grid_sat(const MdlFormula& phi) {
  Rational g(0), span(1);
  for (const auto& c : atom_constants(phi)) {
    g = rational_gcd(g, c);
    span = span + abs(c);
  }
  Rational pitch = g.is_zero() ? Rational(1, 2) : g / Rational(2);
  std::vector<Rational> grid;
  for (Rational v = -span; v <= span; v = v + pitch) grid.push_back(v);
  // Free variables are existential for satisfiability.
  std::set<VarId> free = free_vars(phi);
  std::vector<VarId> order(free.begin(), free.end());
  Valuation v;
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return grid_eval(phi, v, grid);
    for (const auto& gv : grid) {
      v[order[i]] = gv;
      if (self(self, i + 1)) return true;
    }
    v.erase(order[i]);
    return false;
  };
  return assign(assign, 0);
}

}  // namespace

TEST_CASE("decision procedure agrees with grid-sampling satisfiability") {
  // Small integer constants keep the grid tractable; two quantifiers at most.
  gen::Rng rng(271828);
  for (int i = 0; i < 500; ++i) {
    std::vector<VarId> scope{kZeroVar};
    int atoms = gen::uniform(rng, 1, 2);
    int vars_left = 2;
    MdlFormula phi = gen::random_dl(rng, scope, atoms, 2, vars_left, 3, /*const_range=*/4);
    CHECK(dl_satisfiable(phi) == grid_sat(phi));
  }
}
