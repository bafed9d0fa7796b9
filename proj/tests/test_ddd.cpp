#include "doctest.h"
#include "gen.hpp"
#include "mdlmon/ddd.hpp"
#include "mdlmon/refsolver.hpp"

using namespace mdlmon;

namespace {

const VarId vx(1), vy(2);

// 0 <= y-x <= 3 -> 4 <= y-z <= 7, the satisfiable guard/window implication.
MdlFormula guarded_window() {
  MdlFormula guard = MdlFormula::conj(MdlFormula::diff(vx, vy, Bound{Rational(0), false}),
                                      MdlFormula::diff(vy, vx, Bound{Rational(3), false}));
  MdlFormula window = MdlFormula::conj(MdlFormula::diff(kZeroVar, vy, Bound{Rational(-4), false}),
                                       MdlFormula::diff(vy, kZeroVar, Bound{Rational(7), false}));
  return MdlFormula::disj(MdlFormula::neg(guard), window);
}

}  // namespace

TEST_CASE("atom construction normalizes the variable order") {
  DddManager m;
  // y - z <= 7 with position(y) > position(z) flips into the complement
  // branch of z - y < -7.
  NodeId n = m.atom(vy, kZeroVar, Bound{Rational(7), false});
  REQUIRE(!m.is_terminal(n));
  CHECK(m.node_atom(n) == NormAtom{kZeroVar, vy, Bound{Rational(-7), true}});
  CHECK(m.node_high(n) == kFalseNode);
  CHECK(m.node_low(n) == kTrueNode);

  // Self differences evaluate to terminals.
  CHECK(m.atom(vx, vx, Bound{Rational(0), false}) == kTrueNode);
  CHECK(m.atom(vx, vx, Bound{Rational(0), true}) == kFalseNode);
  CHECK(m.atom(vx, vx, Bound{Rational(-1), false}) == kFalseNode);
}

TEST_CASE("apply identities and annihilators") {
  DddManager m;
  NodeId d = m.build(guarded_window());
  CHECK(m.apply_and(d, kTrueNode) == d);
  CHECK(m.apply_and(d, kFalseNode) == kFalseNode);
  CHECK(m.apply_or(d, kTrueNode) == kTrueNode);
  CHECK(m.apply_or(d, kFalseNode) == d);
  CHECK(m.apply_and(d, d) == d);
}

TEST_CASE("negation swaps terminals and is a structural involution") {
  DddManager m;
  CHECK(m.negate(kFalseNode) == kTrueNode);
  CHECK(m.negate(kTrueNode) == kFalseNode);
  gen::Rng rng(606);
  for (int i = 0; i < 100; ++i) {
    NodeId d = m.build(to_positive_form(gen::random_closed_dl(rng, 4, 2)));
    CHECK(m.negate(m.negate(d)) == d);
    CHECK(m.validate(d));
  }
}

TEST_CASE("negating the guarded window yields a satisfiable diagram") {
  DddManager m;
  NodeId d = m.build(guarded_window());
  NodeId nd = m.negate(d);
  CHECK_FALSE(m.is_unsat(nd));
  CHECK_FALSE(m.is_taut(nd));
  CHECK(decide_dl(MdlFormula::neg(guarded_window())) == Decision::Contingent);
}

TEST_CASE("existential projection on the stated examples") {
  DddManager m;
  // exists x. (x-y <= 0 and y-x <= -1): empty solution set projects to 0.
  NodeId infeasible = m.apply_and(m.atom(vx, vy, Bound{Rational(0), false}),
                                  m.atom(vy, vx, Bound{Rational(-1), false}));
  CHECK(m.exists(vx, infeasible) == kFalseNode);

  // exists x. 0 <= x-z <= 8: a non-empty cylinder over x projects to 1.
  NodeId cylinder = m.apply_and(m.atom(kZeroVar, vx, Bound{Rational(0), false}),
                                m.atom(vx, kZeroVar, Bound{Rational(8), false}));
  CHECK(m.exists(vx, cylinder) == kTrueNode);

  // Projection agrees with the reference elimination on a constrained system.
  NodeId sys = m.apply_and(cylinder, m.apply_and(m.atom(vy, vx, Bound{Rational(3), false}),
                                                 m.atom(vx, vy, Bound{Rational(0), false})));
  NodeId projected = m.exists(vx, sys);
  std::vector<Constraint> cons{{kZeroVar, vx, Bound{Rational(0), false}},
                               {vx, kZeroVar, Bound{Rational(8), false}},
                               {vy, vx, Bound{Rational(3), false}},
                               {vx, vy, Bound{Rational(0), false}}};
  NodeId reference = kTrueNode;
  for (const auto& c : fm_eliminate(vx, cons)) reference = m.apply_and(reference, m.atom(c.x, c.y, c.bound));
  // Semantic equality via mutual implication.
  CHECK(m.is_taut(m.apply_or(m.negate(projected), reference)));
  CHECK(m.is_taut(m.apply_or(m.negate(reference), projected)));
  CHECK_FALSE(m.is_unsat(projected));
}

TEST_CASE("path feasibility on single constraints and strict zero cycles") {
  NormAtom xy{vx, vy, Bound{Rational(3), false}};
  CHECK(path_feasible({PathStep{xy, true}}));
  // x-y <= 0 and y-x < 0 close a zero-weight cycle with a strict edge.
  NormAtom le0{vx, vy, Bound{Rational(0), false}};
  NormAtom lt0{vx, vy, Bound{Rational(0), true}};
  CHECK_FALSE(path_feasible({PathStep{le0, true}, PathStep{lt0, false}}));
}

TEST_CASE("every path of the guarded-window diagram is feasible") {
  DddManager m;
  NodeId d = m.build(guarded_window());
  auto paths = m.enumerate_paths(d);
  CHECK(paths.size() >= 4);
  bool some_false_path = false;
  for (const auto& p : paths) {
    CHECK(path_feasible(p.steps));
    if (!p.terminal) some_false_path = true;
  }
  CHECK(some_false_path);  // satisfiable but not valid
  CHECK_FALSE(m.is_taut(d));
  CHECK_FALSE(m.is_unsat(d));
  CHECK(m.validate(d));
}

TEST_CASE("tautology and unsatisfiability on terminals and tiny systems") {
  DddManager m;
  CHECK(m.is_taut(kTrueNode));
  CHECK_FALSE(m.is_taut(kFalseNode));
  CHECK(m.is_unsat(kFalseNode));
  CHECK_FALSE(m.is_unsat(kTrueNode));
  NodeId contradiction = m.apply_and(m.atom(vx, vy, Bound{Rational(0), false}),
                                     m.atom(vy, vx, Bound{Rational(0), true}));
  CHECK(m.is_unsat(contradiction));
  CHECK(m.is_taut(m.negate(contradiction)));
}

TEST_CASE("closed build rejects stray free variables") {
  DddManager m;
  CHECK_THROWS_AS(m.build_closed(MdlFormula::diff(vx, kZeroVar, Bound{Rational(1), false})),
                  std::invalid_argument);
  CHECK_THROWS_AS(m.build(MdlFormula::pred(PredId(1), vx)), std::invalid_argument);
  CHECK(m.build_closed(MdlFormula::exists(vx, MdlFormula::diff(vx, kZeroVar, Bound{Rational(1), false}))) ==
        kTrueNode);
}

TEST_CASE("diagram decisions agree with the reference procedure") {
  gen::Rng rng(717);
  for (int i = 0; i < 250; ++i) {
    MdlFormula phi = gen::random_closed_dl(rng);
    Decision ref = decide_dl(phi);
    DddManager m;
    NodeId d = m.build_closed(phi);
    CHECK(m.is_taut(d) == (ref == Decision::Valid));
    CHECK(m.is_unsat(d) == (ref == Decision::Unsatisfiable));
    CHECK(m.validate(d));
  }
}

TEST_CASE("diagram export lists one node per line") {
  DddManager m;
  NodeId d = m.build(guarded_window());
  std::string text = m.dump(d);
  CHECK(text.find("# root " + std::to_string(d)) == 0);
  CHECK(text.find("z-v2 < -7 ? ") != std::string::npos);
  // Every non-comment line names a node id and two children.
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = text.find('\n', pos)) != std::string::npos; ++pos) ++lines;
  CHECK(lines >= 4);
}
