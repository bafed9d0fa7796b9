#include "doctest.h"
#include "gen.hpp"
#include "mdlmon/ddd.hpp"
#include "mdlmon/monitor.hpp"
#include "mdlmon/parse.hpp"
#include "mdlmon/refsolver.hpp"
#include "mdlmon/translate.hpp"

using namespace mdlmon;

namespace {

bool taut_zero(const MdlFormula& phi) {
  DddManager m;
  return m.is_taut(m.build_closed(literal_substitute(phi, false)));
}

MonadicSets extension_sets(gen::Rng& rng, const RunPrefix& prefix, int num_props) {
  RunPrefix extended = prefix;
  Rational t = prefix.back().time;
  int extra = gen::uniform(rng, 0, 3);
  for (int i = 0; i < extra; ++i) {
    t = t + Rational(gen::uniform(rng, 1, 4), 2);
    extended.append(TimedState{gen::random_state(rng, num_props), t});
  }
  return monadic_sets(extended, t + Rational(gen::uniform(rng, 1, 8), 2), num_props);
}

}  // namespace

TEST_CASE("initial verdicts from the very first state") {
  Monitor fulfilled(parse_btl("p1"), {PropId(1)});
  CHECK(fulfilled.verdict().state == VerdictState::Fulfilled);
  CHECK(fulfilled.verdict().time == Rational(0));
  CHECK(fulfilled.verdict().source == VerdictSource::Initial);

  Monitor failed(parse_btl("p1"), {});
  CHECK(failed.verdict().state == VerdictState::Failed);
  CHECK(failed.verdict().time == Rational(0));

  Monitor open(parse_btl("eventually[8] always[3] p2"), {PropId(1)});
  CHECK(open.verdict().state == VerdictState::Undetermined);
}

TEST_CASE("the running example concludes at the third event") {
  Monitor m(parse_btl("eventually[8] always[3] p2"), {PropId(1)});
  Verdict v1 = m.feed(TimedState{{PropId(1), PropId(2)}, Rational(4)});
  CHECK(v1.state == VerdictState::Undetermined);
  Verdict v2 = m.feed(TimedState{{PropId(2)}, Rational(7)});
  CHECK(v2.state == VerdictState::Fulfilled);
  CHECK(v2.time == Rational(7));
  CHECK(v2.source == VerdictSource::Event);
  CHECK_THROWS_AS(m.feed(TimedState{{}, Rational(9)}), std::logic_error);
}

TEST_CASE("feeds must advance time") {
  Monitor m(parse_btl("eventually[8] p2"), {});
  m.feed(TimedState{{}, Rational(2)});
  CHECK_THROWS_AS(m.feed(TimedState{{}, Rational(2)}), std::invalid_argument);
}

TEST_CASE("the conflicted formula stays undetermined under the plain loop") {
  Monitor m(parse_btl("eventually[5] p & always[5] !p"), {});
  for (int t = 1; t <= 3; ++t) {
    CHECK(m.feed(TimedState{{}, Rational(t)}).state == VerdictState::Undetermined);
  }
}

TEST_CASE("earliest decision timepoints of the two base modalities") {
  MdlFormula ev = initial_point_substitution(translate_positive(parse_btl("eventually[10] p1")), {});
  CHECK_FALSE(compute_ett(ev, {}, Rational(0)).has_value());
  CHECK(compute_eut(ev, {}, Rational(0)) == Rational(10));

  MdlFormula alw = initial_point_substitution(translate_positive(parse_btl("always[10] p1")), {PropId(1)});
  CHECK(compute_ett(alw, {PropId(1)}, Rational(0)) == Rational(10));
  CHECK_FALSE(compute_eut(alw, {PropId(1)}, Rational(0)).has_value());
}

TEST_CASE("an already decided formula reports the current time") {
  MdlFormula phi = initial_point_substitution(translate_positive(parse_btl("p1 | !p1")), {});
  CHECK(compute_ett(phi, {}, Rational(3)) == Rational(3));
  MdlFormula bad = initial_point_substitution(translate_positive(parse_btl("p1 & !p1")), {});
  CHECK(compute_eut(bad, {}, Rational(3)) == Rational(3));
}

TEST_CASE("earliest timepoints match a fine-grid search") {
  gen::Rng rng(3030);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    BtlFormula psi = gen::random_bounded_btl(rng, gen::uniform(rng, 1, 2), 2);
    std::set<PropId> s = gen::random_state(rng, 2);
    MdlFormula phi = initial_point_substitution(translate_positive(psi), s);
    Rational t(0);
    auto ett = compute_ett(phi, s, t);
    // Fine grid: quarter steps across twice the largest constant.
    Rational maxc(0);
    for (const auto& c : atom_constants(phi)) maxc = max(maxc, abs(c));
    if (maxc.is_zero()) continue;
    ++checked;
    std::optional<Rational> grid_hit;
    for (Rational g = t + Rational(1, 4); g <= t + maxc * Rational(2); g = g + Rational(1, 4)) {
      if (taut_zero(quotient_step(phi, TimedState{s, t}, TimedState{s, g}))) {
        grid_hit = g;
        break;
      }
    }
    if (ett) {
      // The reported time is genuinely a decision point and no earlier grid
      // point decides.
      if (*ett > t) CHECK(taut_zero(quotient_step(phi, TimedState{s, t}, TimedState{s, *ett})));
      if (grid_hit) CHECK(*ett <= *grid_hit);
    } else {
      CHECK_FALSE(grid_hit.has_value());
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("timer injection decides without further events") {
  Monitor conflicted(parse_btl("eventually[5] p & always[5] !p"), {});
  auto verdicts = conflicted.feed_timed(std::nullopt);
  REQUIRE(!verdicts.empty());
  CHECK(verdicts.back().state == VerdictState::Failed);
  CHECK(verdicts.back().time == Rational(5));
  CHECK(verdicts.back().source == VerdictSource::Timer);

  Monitor held(parse_btl("always[10] p1"), {PropId(1)});
  verdicts = held.feed_timed(std::nullopt);
  REQUIRE(!verdicts.empty());
  CHECK(verdicts.back().state == VerdictState::Fulfilled);
  CHECK(verdicts.back().time == Rational(10));
  CHECK(verdicts.back().source == VerdictSource::Timer);
}

TEST_CASE("an event before the timer expiry is handled as a plain feed") {
  Monitor m(parse_btl("eventually[5] p & always[5] !p"), {});
  auto verdicts = m.feed_timed(TimedState{{}, Rational(3)});
  REQUIRE(verdicts.size() == 1);
  CHECK(verdicts[0].state == VerdictState::Undetermined);
  CHECK(verdicts[0].source == VerdictSource::Event);
  // The expiry still fires afterwards.
  auto rest = m.feed_timed(std::nullopt);
  REQUIRE(!rest.empty());
  CHECK(rest.back().state == VerdictState::Failed);
  CHECK(rest.back().time == Rational(5));
}

TEST_CASE("feeding a decided monitor through the timed interface is a no-op") {
  Monitor m(parse_btl("p1"), {PropId(1)});
  CHECK(m.decided());
  CHECK(m.feed_timed(std::nullopt).empty());
  CHECK(m.feed_timed(TimedState{{}, Rational(1)}).empty());
  CHECK(m.verdict().state == VerdictState::Fulfilled);
}

TEST_CASE("decisions are sound for every continuation of the run") {
  gen::Rng rng(4040);
  int decided = 0;
  for (int i = 0; i < 400 && decided < 40; ++i) {
    BtlFormula psi = gen::random_bounded_btl(rng, gen::uniform(rng, 1, 2), 2);
    RunPrefix prefix = gen::random_prefix(rng, 4, 2);
    Monitor m(psi, prefix[0].state);
    for (std::size_t k = 1; k < prefix.size() && !m.decided(); ++k) m.feed(prefix[k]);
    if (!m.decided()) continue;
    ++decided;
    RunPrefix seen;
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      if (prefix[k].time <= m.verdict().time) seen.append(prefix[k]);
    }
    MdlFormula original = translate_positive(psi);
    bool expect = m.verdict().state == VerdictState::Fulfilled;
    for (int e = 0; e < 50; ++e) {
      MonadicSets S = extension_sets(rng, seen, 2);
      CHECK(eval_mdl(original, {{kZeroVar, Rational(0)}}, S) == expect);
    }
  }
  CHECK(decided == 40);
}

TEST_CASE("a zero-substitution tautology makes the whole formula tautological") {
  gen::Rng rng(5050);
  int hits = 0;
  for (int i = 0; i < 300 && hits < 8; ++i) {
    BtlFormula psi = gen::random_bounded_btl(rng, gen::uniform(rng, 1, 2), 2);
    RunPrefix prefix = gen::random_prefix(rng, 3, 2);
    MdlFormula phi = initial_point_substitution(translate_positive(psi), prefix[0].state);
    for (std::size_t k = 0; k + 1 < prefix.size(); ++k) phi = quotient_step(phi, prefix[k], prefix[k + 1]);
    if (!taut_zero(phi)) continue;
    ++hits;
    for (int e = 0; e < 100; ++e) {
      MonadicSets S{gen::random_interval_union(rng, Rational(16)), gen::random_interval_union(rng, Rational(16))};
      CHECK(eval_mdl(phi, {{kZeroVar, Rational(0)}}, S));
    }
  }
  CHECK(hits == 8);
}

TEST_CASE("on homogeneous formulas an undecided zero-substitution falsifies at the extreme sets") {
  gen::Rng rng(6060);
  int tested = 0;
  for (int i = 0; i < 300 && tested < 60; ++i) {
    BtlFormula psi = gen::random_bounded_btl(rng, gen::uniform(rng, 1, 2), 2);
    MdlFormula phi = translate_positive(psi);
    if (!is_homogeneous(phi)) continue;
    MdlFormula zero = literal_substitute(phi, false);
    if (decide_dl(zero) == Decision::Valid) continue;
    ++tested;
    // Extreme collection: empty for positively occurring predicates, all of
    // R+ for negative-only or absent ones. With only z free the falsifying
    // witness is z = 0 (predicate-free formulas over one variable are rigid).
    PolaritySets ps = polarity_sets(phi);
    std::uint32_t count = std::max<std::uint32_t>(max_pred_index(phi), 1);
    MonadicSets extreme;
    for (std::uint32_t j = 1; j <= count; ++j) {
      if (ps.positive.count(PredId(j))) {
        extreme.push_back(IntervalUnion{});
      } else {
        extreme.push_back(IntervalUnion::all_nonnegative());
      }
    }
    CHECK_FALSE(eval_mdl(phi, {{kZeroVar, Rational(0)}}, extreme));
  }
  CHECK(tested == 60);
}

TEST_CASE("the loop invariant holds after every feed: the past is folded in") {
  gen::Rng rng(7070);
  for (int i = 0; i < 30; ++i) {
    BtlFormula psi = gen::random_bounded_btl(rng, gen::uniform(rng, 1, 2), 2);
    RunPrefix prefix = gen::random_prefix(rng, 4, 2);
    Monitor m(psi, prefix[0].state);
    for (std::size_t k = 1; k < prefix.size() && !m.decided(); ++k) {
      m.feed(prefix[k]);
      MonadicSets S{gen::random_interval_union(rng, m.time() + Rational(8)),
                    gen::random_interval_union(rng, m.time() + Rational(8))};
      Valuation v{{kZeroVar, Rational(0)}};
      bool before = eval_mdl(m.formula(), v, S);
      MonadicSets mutated = S;
      for (auto& su : mutated) {
        Rational a = m.time() * Rational(gen::uniform(rng, 0, 4), 4);
        Rational b = m.time() * Rational(gen::uniform(rng, 0, 4), 4);
        if (b < a) std::swap(a, b);
        Interval edit{a, gen::coin(rng), b, gen::coin(rng)};
        if (gen::coin(rng)) {
          su.add(edit);
        } else {
          su.subtract(edit);
        }
      }
      CHECK(eval_mdl(m.formula(), v, mutated) == before);
    }
  }
}
