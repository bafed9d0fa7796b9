#include "mdlmon/refsolver.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdlmon {

std::string to_string(ThreeValued v) {
  switch (v) {
    case ThreeValued::False:
      return "false";
    case ThreeValued::Unknown:
      return "unknown";
    case ThreeValued::True:
      return "true";
  }
  return "?";
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Valid:
      return "valid";
    case Decision::Unsatisfiable:
      return "unsatisfiable";
    case Decision::Contingent:
      return "contingent";
  }
  return "?";
}

MonadicSets monadic_sets(const RunPrefix& prefix, const Rational& horizon, std::uint32_t min_props) {
  if (prefix.empty()) throw std::invalid_argument("monadic sets of an empty prefix");
  if (horizon < prefix.back().time) throw std::invalid_argument("horizon before the last event");
  std::uint32_t count = std::max(prefix.max_prop_index(), min_props);
  MonadicSets sets(count);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const TimedState& cur = prefix[i];
    for (const auto& p : cur.state) {
      if (i + 1 < prefix.size()) {
        sets[p.index - 1].add(Interval::right_open(cur.time, prefix[i + 1].time));
      } else {
        sets[p.index - 1].add(Interval::closed(cur.time, horizon));
      }
    }
  }
  return sets;
}

// ---------------------------------------------------------------------------
// MDL evaluation by breakpoint sampling
// ---------------------------------------------------------------------------

namespace {

std::size_t quantifier_depth(const MdlFormula& f) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < f.child_count(); ++i) m = std::max(m, quantifier_depth(f.child(i)));
  if (f.kind() == MdlKind::Forall || f.kind() == MdlKind::Exists) return m + 1;
  return m;
}

struct MdlEvalCtx {
  const MonadicSets& S;
  std::vector<Rational> endpoints;  // all interval endpoints across S
  std::vector<Rational> constants;  // distinct atom constants of the formula
  bool dense = false;
  std::map<std::size_t, std::vector<Rational>> offset_cache;

  const std::vector<Rational>& offsets(std::size_t depth) {
    auto it = offset_cache.find(depth);
    if (it != offset_cache.end()) return it->second;
    std::set<Rational> sums{Rational(0)};
    for (std::size_t round = 0; round < depth; ++round) {
      std::set<Rational> next = sums;
      for (const auto& s : sums) {
        for (const auto& c : constants) {
          next.insert(s + c);
          next.insert(s - c);
        }
      }
      sums = std::move(next);
    }
    return offset_cache.emplace(depth, std::vector<Rational>(sums.begin(), sums.end())).first->second;
  }
};

void insert_midpoints(std::vector<Rational>& sorted) {
  std::vector<Rational> out;
  out.reserve(sorted.size() * 2);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out.push_back((sorted[i - 1] + sorted[i]) / Rational(2));
    out.push_back(sorted[i]);
  }
  sorted = std::move(out);
}

std::vector<Rational> quantifier_candidates(MdlEvalCtx& ctx, const Valuation& v, std::size_t depth) {
  std::set<Rational> base{Rational(0)};
  for (const auto& e : ctx.endpoints) base.insert(e);
  for (const auto& [var, val] : v) base.insert(val);
  const auto& offs = ctx.offsets(depth);
  std::set<Rational> cands;
  for (const auto& b : base) {
    for (const auto& o : offs) {
      Rational c = b + o;
      if (!c.is_negative()) cands.insert(c);
    }
  }
  cands.insert(Rational(0));
  std::vector<Rational> sorted(cands.begin(), cands.end());
  insert_midpoints(sorted);
  sorted.push_back(sorted.back() + Rational(1));
  if (ctx.dense) insert_midpoints(sorted);
  return sorted;
}

const Rational& value_of(const Valuation& v, VarId x) {
  auto it = v.find(x);
  if (it == v.end()) throw std::invalid_argument("unbound variable " + x.name());
  return it->second;
}

bool eval_rec(const MdlFormula& f, Valuation& v, MdlEvalCtx& ctx) {
  switch (f.kind()) {
    case MdlKind::Pred: {
      PredId j = f.pred_id();
      if (j.index > ctx.S.size()) throw std::invalid_argument("no set for predicate " + j.name());
      bool in = ctx.S[j.index - 1].contains(value_of(v, f.pred_var()));
      return f.pred_negated() ? !in : in;
    }
    case MdlKind::Diff: {
      const DiffAtom& a = f.diff_atom();
      Rational d = value_of(v, a.x) - value_of(v, a.y);
      bool sat = a.bound.strict ? d < a.bound.value : d <= a.bound.value;
      return a.refuted ? !sat : sat;
    }
    case MdlKind::BoolConst:
      return f.const_value();
    case MdlKind::And:
      return eval_rec(f.child(0), v, ctx) && eval_rec(f.child(1), v, ctx);
    case MdlKind::Or:
      return eval_rec(f.child(0), v, ctx) || eval_rec(f.child(1), v, ctx);
    case MdlKind::Not:
      return !eval_rec(f.child(0), v, ctx);
    case MdlKind::Forall:
    case MdlKind::Exists: {
      bool is_forall = f.kind() == MdlKind::Forall;
      VarId x = f.quant_var();
      std::size_t depth = quantifier_depth(f);
      auto cands = quantifier_candidates(ctx, v, depth);
      auto saved = v.find(x) != v.end() ? std::optional<Rational>(v[x]) : std::nullopt;
      bool result = is_forall;
      for (const auto& c : cands) {
        v[x] = c;
        bool b = eval_rec(f.child(0), v, ctx);
        if (is_forall && !b) {
          result = false;
          break;
        }
        if (!is_forall && b) {
          result = true;
          break;
        }
      }
      if (saved) {
        v[x] = *saved;
      } else {
        v.erase(x);
      }
      return result;
    }
  }
  throw std::logic_error("unreachable");
}

bool eval_with_density(const MdlFormula& phi, const Valuation& v, const MonadicSets& S, bool dense) {
  MdlEvalCtx ctx{S, {}, {}, dense, {}};
  std::set<Rational> eps;
  for (const auto& su : S) {
    for (const auto& e : su.endpoints()) eps.insert(e);
  }
  ctx.endpoints.assign(eps.begin(), eps.end());
  auto consts = atom_constants(phi);
  ctx.constants.assign(consts.begin(), consts.end());
  Valuation scratch = v;
  return eval_rec(phi, scratch, ctx);
}

}  // namespace

bool eval_mdl(const MdlFormula& phi, const Valuation& v, const MonadicSets& S) {
  return eval_with_density(phi, v, S, false);
}

bool eval_mdl_dense(const MdlFormula& phi, const Valuation& v, const MonadicSets& S) {
  return eval_with_density(phi, v, S, true);
}

// ---------------------------------------------------------------------------
// Three-valued run evaluation through truth interval-unions
// ---------------------------------------------------------------------------

namespace {

struct TruthSets {
  IntervalUnion t;
  IntervalUnion f;
};

// {u : exists u' in [u, u+c] with u' in U}
IntervalUnion dilate_back(const IntervalUnion& u, const Rational& c) {
  IntervalUnion out;
  for (const auto& p : u.parts()) {
    Interval iv = p;
    iv.lo = p.lo - c;
    out.add(iv);
  }
  return out;
}

// {u : [u, u+c] subset of U}
IntervalUnion erode_closed(const IntervalUnion& u, const Rational& c) {
  IntervalUnion out;
  for (const auto& p : u.parts()) {
    Interval iv = p;
    if (p.hi) {
      iv.hi = *p.hi - c;
      if (*iv.hi < iv.lo || (*iv.hi == iv.lo && !(iv.lo_closed && iv.hi_closed))) continue;
    }
    out.add(iv);
  }
  return out;
}

// {u : u + c in U}
IntervalUnion shift_back(const IntervalUnion& u, const Rational& c) {
  IntervalUnion out;
  for (const auto& p : u.parts()) {
    Interval iv = p;
    iv.lo = p.lo - c;
    if (p.hi) iv.hi = *p.hi - c;
    out.add(iv);
  }
  return out;
}

// {u : [u, u+c) subset of U}, for c > 0
IntervalUnion erode_halfopen(const IntervalUnion& u, const Rational& c) {
  IntervalUnion out;
  for (const auto& p : u.parts()) {
    Interval iv = p;
    if (p.hi) {
      iv.hi = *p.hi - c;
      iv.hi_closed = true;
      if (*iv.hi < iv.lo || (*iv.hi == iv.lo && !iv.lo_closed)) continue;
    }
    out.add(iv);
  }
  return out;
}

// {u : exists u' in [u, u+c) with u' in U}, for c > 0
IntervalUnion dilate_back_halfopen(const IntervalUnion& u, const Rational& c) {
  IntervalUnion out;
  for (const auto& p : u.parts()) {
    Interval iv = p;
    iv.lo = p.lo - c;
    iv.lo_closed = false;
    out.add(iv);
  }
  return out;
}

// {u : exists u' >= u + c with u' in U}
IntervalUnion reach_forward(const IntervalUnion& u, const Rational& c) {
  IntervalUnion out;
  if (u.empty()) return out;
  const Interval& last = u.parts().back();
  Interval iv{Rational(0), true, std::nullopt, true};
  if (last.hi) {
    iv.hi = *last.hi - c;
    iv.hi_closed = last.hi_closed;
    if (iv.hi->is_negative()) return out;
  }
  out.add(iv);
  return out;
}

TruthSets eval_sets(const BtlFormula& psi, const MonadicSets& S, const IntervalUnion& dom, const Rational& H) {
  switch (psi.kind()) {
    case BtlKind::Prop: {
      std::uint32_t j = psi.prop_id().index;
      IntervalUnion t = j <= S.size() ? S[j - 1].intersect(dom) : IntervalUnion{};
      return {t, dom.subtract(t)};
    }
    case BtlKind::Not: {
      TruthSets a = eval_sets(psi.child(0), S, dom, H);
      return {a.f, a.t};
    }
    case BtlKind::And: {
      TruthSets a = eval_sets(psi.child(0), S, dom, H);
      TruthSets b = eval_sets(psi.child(1), S, dom, H);
      return {a.t.intersect(b.t), a.f.unite(b.f)};
    }
    case BtlKind::Or: {
      TruthSets a = eval_sets(psi.child(0), S, dom, H);
      TruthSets b = eval_sets(psi.child(1), S, dom, H);
      return {a.t.unite(b.t), a.f.intersect(b.f)};
    }
    case BtlKind::Implies: {
      TruthSets a = eval_sets(psi.child(0), S, dom, H);
      TruthSets b = eval_sets(psi.child(1), S, dom, H);
      return {a.f.unite(b.t), a.t.intersect(b.f)};
    }
    case BtlKind::Iff: {
      TruthSets a = eval_sets(psi.child(0), S, dom, H);
      TruthSets b = eval_sets(psi.child(1), S, dom, H);
      return {a.t.intersect(b.t).unite(a.f.intersect(b.f)), a.t.intersect(b.f).unite(a.f.intersect(b.t))};
    }
    case BtlKind::Always: {
      TruthSets a = eval_sets(psi.child(0), S, dom, H);
      const Rational& c = psi.bound();
      IntervalUnion t;
      if (c <= H) {
        IntervalUnion window{Interval::closed(Rational(0), H - c)};  // the whole window is observed
        t = erode_closed(a.t, c).intersect(window);
      }
      return {t, dilate_back(a.f, c).intersect(dom)};
    }
    case BtlKind::Eventually: {
      TruthSets a = eval_sets(psi.child(0), S, dom, H);
      const Rational& c = psi.bound();
      IntervalUnion f;
      if (c <= H) {
        IntervalUnion window{Interval::closed(Rational(0), H - c)};
        f = erode_closed(a.f, c).intersect(window);
      }
      return {dilate_back(a.t, c).intersect(dom), f};
    }
    case BtlKind::AlwaysUnbounded: {
      TruthSets a = eval_sets(psi.child(0), S, dom, H);
      // Never decisively true from a finite prefix.
      return {IntervalUnion{}, reach_forward(a.f, Rational(0)).intersect(dom)};
    }
    case BtlKind::After: {
      TruthSets a = eval_sets(psi.child(0), S, dom, H);
      // Never decisively false: the witness window is unbounded.
      return {reach_forward(a.t, psi.bound()).intersect(dom), IntervalUnion{}};
    }
    case BtlKind::Between: {
      TruthSets a = eval_sets(psi.child(0), S, dom, H);
      const Rational& c = psi.bound();
      const Rational& d = psi.upper_bound();
      IntervalUnion t;
      for (const auto& p : a.t.parts()) {
        Interval iv = p;
        iv.lo = p.lo - d;
        if (p.hi) iv.hi = *p.hi - c;
        t.add(iv);
      }
      IntervalUnion f;
      if (d <= H) {
        IntervalUnion window{Interval::closed(Rational(0), H - d)};
        for (const auto& p : a.f.parts()) {
          Interval iv = p;
          iv.lo = p.lo - c;
          if (p.hi) {
            iv.hi = *p.hi - d;
            if (*iv.hi < iv.lo || (*iv.hi == iv.lo && !(iv.lo_closed && iv.hi_closed))) continue;
          }
          f.add(iv);
        }
        f = f.intersect(window);
      }
      return {t.intersect(dom), f};
    }
    case BtlKind::UntilExact: {
      TruthSets l = eval_sets(psi.child(0), S, dom, H);
      TruthSets r = eval_sets(psi.child(1), S, dom, H);
      const Rational& c = psi.bound();
      if (c.is_zero()) return {r.t, r.f};
      IntervalUnion t;
      if (c <= H) {
        IntervalUnion window{Interval::closed(Rational(0), H - c)};
        t = erode_halfopen(l.t, c).intersect(shift_back(r.t, c)).intersect(window);
      }
      IntervalUnion f = dilate_back_halfopen(l.f, c).unite(shift_back(r.f, c)).intersect(dom);
      return {t, f};
    }
    case BtlKind::Until: {
      TruthSets l = eval_sets(psi.child(0), S, dom, H);
      TruthSets r = eval_sets(psi.child(1), S, dom, H);
      IntervalUnion t = r.t.intersect(dom);
      for (const auto& a : l.t.parts()) {
        if (!a.hi) continue;
        // Witnesses y with u < y <= sup(a): the half-open gap [u, y) stays
        // inside this maximal true-interval of the left operand.
        IntervalUnion w = r.t.intersect(IntervalUnion{Interval{a.lo, false, *a.hi, true}});
        if (w.empty()) continue;
        const Interval& lastw = w.parts().back();
        Rational m = lastw.hi ? *lastw.hi : *a.hi;
        IntervalUnion reach{Interval{Rational(0), true, m, false}};
        t = t.unite(reach.intersect(IntervalUnion{a}));
      }
      IntervalUnion f;
      for (const auto& b : r.f.parts()) {
        // A left-operand falsification point f inside this false-interval of
        // the right operand refutes every u <= f within it.
        IntervalUnion w = l.f.intersect(IntervalUnion{b});
        if (w.empty()) continue;
        const Interval& lastw = w.parts().back();
        if (!lastw.hi) continue;
        IntervalUnion reach{Interval{Rational(0), true, *lastw.hi, lastw.hi_closed}};
        f = f.unite(reach.intersect(IntervalUnion{b}));
      }
      return {t.intersect(dom), f.intersect(dom)};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

ThreeValued eval_btl(const RunPrefix& prefix, const Rational& horizon, const Rational& u,
                     const BtlFormula& psi) {
  if (u > horizon) throw std::invalid_argument("evaluation time beyond the horizon");
  MonadicSets S = monadic_sets(prefix, horizon, psi.max_prop_index());
  IntervalUnion dom{Interval::closed(Rational(0), horizon)};
  TruthSets ts = eval_sets(psi, S, dom, horizon);
  if (ts.t.contains(u)) return ThreeValued::True;
  if (ts.f.contains(u)) return ThreeValued::False;
  return ThreeValued::Unknown;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin elimination and the decision procedure
// ---------------------------------------------------------------------------

std::string Constraint::to_string() const {
  return x.name() + "-" + y.name() + (bound.strict ? "<" : "<=") + bound.value.to_string();
}

Constraint complement(const Constraint& c) {
  return Constraint{c.y, c.x, Bound{-c.bound.value, !c.bound.strict}};
}

bool is_self(const Constraint& c) { return c.x == c.y; }

bool trivially_true(const Constraint& c) { return is_self(c) && c.bound.satisfied_by_zero(); }

std::vector<Constraint> fm_eliminate(VarId x, const std::vector<Constraint>& atoms) {
  std::vector<Constraint> uppers, lowers, rest;
  for (const auto& a : atoms) {
    if (is_self(a)) {
      if (!a.bound.satisfied_by_zero()) rest.push_back(a);  // keep contradictions
    } else if (a.x == x) {
      uppers.push_back(a);
    } else if (a.y == x) {
      lowers.push_back(a);
    } else {
      rest.push_back(a);
    }
  }
  for (const auto& up : uppers) {    // x - y <= c
    for (const auto& lo : lowers) {  // w - x <= d, i.e. w - d <= x
      Constraint combined{lo.x, up.y, up.bound + lo.bound};
      if (is_self(combined)) {
        if (!combined.bound.satisfied_by_zero()) rest.push_back(combined);
      } else {
        rest.push_back(combined);
      }
    }
  }
  // Keep only the tightest bound per variable pair.
  std::vector<Constraint> out;
  for (const auto& a : rest) {
    bool replaced = false;
    for (auto& b : out) {
      if (a.x == b.x && a.y == b.y) {
        if (a.bound.tighter_than(b.bound)) b.bound = a.bound;
        replaced = true;
        break;
      }
    }
    if (!replaced) out.push_back(a);
  }
  return out;
}

bool constraints_feasible(std::vector<Constraint> atoms) {
  std::set<VarId> vars;
  for (const auto& a : atoms) {
    if (!is_self(a)) {
      vars.insert(a.x);
      vars.insert(a.y);
    }
  }
  for (const auto& v : vars) atoms = fm_eliminate(v, atoms);
  for (const auto& a : atoms) {
    if (is_self(a) && !a.bound.satisfied_by_zero()) return false;
  }
  return true;
}

namespace {

using Cube = std::vector<Constraint>;
using Dnf = std::vector<Cube>;

// Tightest-bound dedupe; nullopt when the cube is contradictory on its face.
std::optional<Cube> simplify_cube(const Cube& cube) {
  Cube out;
  for (const auto& a : cube) {
    if (is_self(a)) {
      if (!a.bound.satisfied_by_zero()) return std::nullopt;
      continue;
    }
    bool merged = false;
    for (auto& b : out) {
      if (a.x == b.x && a.y == b.y) {
        if (a.bound.tighter_than(b.bound)) b.bound = a.bound;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(a);
  }
  return out;
}

void push_cube(Dnf& dnf, Cube cube) {
  auto simplified = simplify_cube(cube);
  if (!simplified) return;
  if (!constraints_feasible(*simplified)) return;
  std::sort(simplified->begin(), simplified->end(), [](const Constraint& a, const Constraint& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    if (a.bound.value != b.bound.value) return a.bound.value < b.bound.value;
    return a.bound.strict && !b.bound.strict;
  });
  for (const auto& c : dnf) {
    if (c == *simplified) return;
  }
  dnf.push_back(std::move(*simplified));
}

Dnf and_dnf(const Dnf& a, const Dnf& b) {
  Dnf out;
  for (const auto& ca : a) {
    for (const auto& cb : b) {
      Cube merged = ca;
      merged.insert(merged.end(), cb.begin(), cb.end());
      push_cube(out, std::move(merged));
    }
  }
  return out;
}

Dnf or_dnf(const Dnf& a, const Dnf& b) {
  Dnf out = a;
  for (const auto& c : b) push_cube(out, c);
  return out;
}

Dnf negate_dnf(const Dnf& d) {
  Dnf out{{}};  // true
  for (const auto& cube : d) {
    Dnf clause;  // complement of one cube
    for (const auto& a : cube) push_cube(clause, Cube{complement(a)});
    out = and_dnf(out, clause);
    if (out.empty()) break;
  }
  return out;
}

Dnf eliminate_from_cubes(VarId x, const Dnf& d) {
  Dnf out;
  for (const auto& cube : d) push_cube(out, fm_eliminate(x, cube));
  return out;
}

// Pre: f in positive form, no predicates; quantifiers eliminated bottom-up.
Dnf qe(const MdlFormula& f) {
  switch (f.kind()) {
    case MdlKind::BoolConst:
      return f.const_value() ? Dnf{{}} : Dnf{};
    case MdlKind::Diff: {
      const DiffAtom& a = f.diff_atom();
      Constraint c{a.x, a.y, a.bound};
      if (a.refuted) c = complement(c);
      Dnf out;
      push_cube(out, Cube{c});
      return out;
    }
    case MdlKind::And:
      return and_dnf(qe(f.child(0)), qe(f.child(1)));
    case MdlKind::Or:
      return or_dnf(qe(f.child(0)), qe(f.child(1)));
    case MdlKind::Exists:
      return eliminate_from_cubes(f.quant_var(), qe(f.child(0)));
    case MdlKind::Forall:
      return negate_dnf(eliminate_from_cubes(f.quant_var(), negate_dnf(qe(f.child(0)))));
    case MdlKind::Pred:
      throw std::invalid_argument("decision procedure does not handle predicates");
    case MdlKind::Not:
      throw std::logic_error("negation after positive-form conversion");
  }
  throw std::logic_error("unreachable");
}

}  // namespace

bool dl_satisfiable(const MdlFormula& phi) {
  if (has_predicates(phi)) throw std::invalid_argument("decision procedure does not handle predicates");
  Dnf d = qe(to_positive_form(phi));
  for (const auto& cube : d) {
    if (constraints_feasible(cube)) return true;
  }
  return false;
}

Decision decide_dl(const MdlFormula& phi) {
  if (!dl_satisfiable(phi)) return Decision::Unsatisfiable;
  if (!dl_satisfiable(MdlFormula::neg(phi))) return Decision::Valid;
  return Decision::Contingent;
}

}  // namespace mdlmon
