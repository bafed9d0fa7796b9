#include "mdlmon/mdl.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace mdlmon {

std::string DiffAtom::to_string() const {
  std::string core = x.name() + "-" + y.name() + (bound.strict ? "<" : "<=") + bound.value.to_string();
  return refuted ? "!(" + core + ")" : core;
}

struct MdlFormula::Node {
  MdlKind kind;
  PredId pred{1};
  VarId var;  // predicate argument or quantified variable
  bool flag = false;  // predicate negation or boolean constant value
  DiffAtom atom;
  std::vector<MdlFormula> children;
};

MdlFormula MdlFormula::pred(PredId p, VarId v, bool negated) {
  return MdlFormula(std::make_shared<Node>(Node{MdlKind::Pred, p, v, negated, {}, {}}));
}

MdlFormula MdlFormula::diff(DiffAtom a) {
  if (a.x == a.y) throw std::invalid_argument("difference atom requires distinct variables");
  return MdlFormula(std::make_shared<Node>(Node{MdlKind::Diff, PredId(1), {}, false, std::move(a), {}}));
}

MdlFormula MdlFormula::diff(VarId x, VarId y, Bound b, bool refuted) {
  return diff(DiffAtom{x, y, std::move(b), refuted});
}

MdlFormula MdlFormula::bool_const(bool v) {
  return MdlFormula(std::make_shared<Node>(Node{MdlKind::BoolConst, PredId(1), {}, v, {}, {}}));
}

MdlFormula MdlFormula::conj(MdlFormula l, MdlFormula r) {
  return MdlFormula(std::make_shared<Node>(Node{MdlKind::And, PredId(1), {}, false, {}, {std::move(l), std::move(r)}}));
}

MdlFormula MdlFormula::disj(MdlFormula l, MdlFormula r) {
  return MdlFormula(std::make_shared<Node>(Node{MdlKind::Or, PredId(1), {}, false, {}, {std::move(l), std::move(r)}}));
}

MdlFormula MdlFormula::neg(MdlFormula f) {
  return MdlFormula(std::make_shared<Node>(Node{MdlKind::Not, PredId(1), {}, false, {}, {std::move(f)}}));
}

MdlFormula MdlFormula::forall(VarId v, MdlFormula body) {
  if (v.is_zero_var()) throw std::invalid_argument("the zero variable cannot be quantified");
  return MdlFormula(std::make_shared<Node>(Node{MdlKind::Forall, PredId(1), v, false, {}, {std::move(body)}}));
}

MdlFormula MdlFormula::exists(VarId v, MdlFormula body) {
  if (v.is_zero_var()) throw std::invalid_argument("the zero variable cannot be quantified");
  return MdlFormula(std::make_shared<Node>(Node{MdlKind::Exists, PredId(1), v, false, {}, {std::move(body)}}));
}

MdlKind MdlFormula::kind() const { return node_->kind; }

PredId MdlFormula::pred_id() const {
  if (node_->kind != MdlKind::Pred) throw std::logic_error("pred_id on non-predicate");
  return node_->pred;
}

VarId MdlFormula::pred_var() const {
  if (node_->kind != MdlKind::Pred) throw std::logic_error("pred_var on non-predicate");
  return node_->var;
}

bool MdlFormula::pred_negated() const {
  if (node_->kind != MdlKind::Pred) throw std::logic_error("pred_negated on non-predicate");
  return node_->flag;
}

const DiffAtom& MdlFormula::diff_atom() const {
  if (node_->kind != MdlKind::Diff) throw std::logic_error("diff_atom on non-atom");
  return node_->atom;
}

bool MdlFormula::const_value() const {
  if (node_->kind != MdlKind::BoolConst) throw std::logic_error("const_value on non-constant");
  return node_->flag;
}

VarId MdlFormula::quant_var() const {
  if (node_->kind != MdlKind::Forall && node_->kind != MdlKind::Exists) {
    throw std::logic_error("quant_var on non-quantifier");
  }
  return node_->var;
}

const MdlFormula& MdlFormula::child(std::size_t i) const { return node_->children.at(i); }
std::size_t MdlFormula::child_count() const { return node_->children.size(); }

bool MdlFormula::operator==(const MdlFormula& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case MdlKind::Pred:
      if (node_->pred != o.node_->pred || node_->var != o.node_->var || node_->flag != o.node_->flag) return false;
      break;
    case MdlKind::Diff:
      if (!(node_->atom == o.node_->atom)) return false;
      break;
    case MdlKind::BoolConst:
      if (node_->flag != o.node_->flag) return false;
      break;
    case MdlKind::Forall:
    case MdlKind::Exists:
      if (node_->var != o.node_->var) return false;
      break;
    default:
      break;
  }
  if (node_->children.size() != o.node_->children.size()) return false;
  for (std::size_t i = 0; i < node_->children.size(); ++i) {
    if (!(node_->children[i] == o.node_->children[i])) return false;
  }
  return true;
}

namespace {

bool mdl_is_leaf(const MdlFormula& f) {
  switch (f.kind()) {
    case MdlKind::Pred:
    case MdlKind::Diff:
    case MdlKind::BoolConst:
      return true;
    default:
      return false;
  }
}

std::string mdl_wrap(const MdlFormula& f) {
  if (mdl_is_leaf(f)) return f.to_string();
  return "(" + f.to_string() + ")";
}

}  // namespace

std::string MdlFormula::to_string() const {
  switch (node_->kind) {
    case MdlKind::Pred: {
      std::string s = node_->pred.name() + "(" + node_->var.name() + ")";
      return node_->flag ? "!" + s : s;
    }
    case MdlKind::Diff:
      return node_->atom.to_string();
    case MdlKind::BoolConst:
      return node_->flag ? "1" : "0";
    case MdlKind::And:
      return mdl_wrap(node_->children[0]) + " & " + mdl_wrap(node_->children[1]);
    case MdlKind::Or:
      return mdl_wrap(node_->children[0]) + " | " + mdl_wrap(node_->children[1]);
    case MdlKind::Not:
      return "!" + mdl_wrap(node_->children[0]);
    case MdlKind::Forall:
      return "forall " + node_->var.name() + ". " + mdl_wrap(node_->children[0]);
    case MdlKind::Exists:
      return "exists " + node_->var.name() + ". " + mdl_wrap(node_->children[0]);
  }
  return "?";
}

namespace {

MdlFormula positive(const MdlFormula& f, bool negated) {
  switch (f.kind()) {
    case MdlKind::Pred:
      return MdlFormula::pred(f.pred_id(), f.pred_var(), f.pred_negated() != negated);
    case MdlKind::Diff: {
      DiffAtom a = f.diff_atom();
      a.refuted = a.refuted != negated;
      return MdlFormula::diff(a);
    }
    case MdlKind::BoolConst:
      return MdlFormula::bool_const(f.const_value() != negated);
    case MdlKind::And: {
      auto l = positive(f.child(0), negated);
      auto r = positive(f.child(1), negated);
      return negated ? MdlFormula::disj(l, r) : MdlFormula::conj(l, r);
    }
    case MdlKind::Or: {
      auto l = positive(f.child(0), negated);
      auto r = positive(f.child(1), negated);
      return negated ? MdlFormula::conj(l, r) : MdlFormula::disj(l, r);
    }
    case MdlKind::Not:
      return positive(f.child(0), !negated);
    case MdlKind::Forall: {
      auto b = positive(f.child(0), negated);
      return negated ? MdlFormula::exists(f.quant_var(), b) : MdlFormula::forall(f.quant_var(), b);
    }
    case MdlKind::Exists: {
      auto b = positive(f.child(0), negated);
      return negated ? MdlFormula::forall(f.quant_var(), b) : MdlFormula::exists(f.quant_var(), b);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

MdlFormula to_positive_form(const MdlFormula& f) { return positive(f, false); }

bool is_positive_form(const MdlFormula& f) {
  if (f.kind() == MdlKind::Not) return false;
  for (std::size_t i = 0; i < f.child_count(); ++i) {
    if (!is_positive_form(f.child(i))) return false;
  }
  return true;
}

MdlFormula literal_substitute(const MdlFormula& f, bool value) {
  switch (f.kind()) {
    case MdlKind::Pred:
      return MdlFormula::bool_const(value);
    case MdlKind::Diff:
    case MdlKind::BoolConst:
      return f;
    case MdlKind::And:
      return MdlFormula::conj(literal_substitute(f.child(0), value), literal_substitute(f.child(1), value));
    case MdlKind::Or:
      return MdlFormula::disj(literal_substitute(f.child(0), value), literal_substitute(f.child(1), value));
    case MdlKind::Not:
      throw std::invalid_argument("literal_substitute requires positive form");
    case MdlKind::Forall:
      return MdlFormula::forall(f.quant_var(), literal_substitute(f.child(0), value));
    case MdlKind::Exists:
      return MdlFormula::exists(f.quant_var(), literal_substitute(f.child(0), value));
  }
  throw std::logic_error("unreachable");
}

namespace {

void collect_polarity(const MdlFormula& f, PolaritySets& out) {
  if (f.kind() == MdlKind::Pred) {
    if (f.pred_negated()) {
      out.negative.insert(f.pred_id());
    } else {
      out.positive.insert(f.pred_id());
    }
    return;
  }
  if (f.kind() == MdlKind::Not) throw std::invalid_argument("polarity_sets requires positive form");
  for (std::size_t i = 0; i < f.child_count(); ++i) collect_polarity(f.child(i), out);
}

}  // namespace

PolaritySets polarity_sets(const MdlFormula& f) {
  PolaritySets out;
  collect_polarity(f, out);
  return out;
}

bool is_homogeneous(const MdlFormula& f) {
  PolaritySets ps = polarity_sets(f);
  for (const auto& p : ps.positive) {
    if (ps.negative.count(p)) return false;
  }
  return true;
}

namespace {

void collect_free(const MdlFormula& f, std::set<VarId>& bound, std::set<VarId>& out) {
  switch (f.kind()) {
    case MdlKind::Pred:
      if (!bound.count(f.pred_var())) out.insert(f.pred_var());
      return;
    case MdlKind::Diff:
      if (!bound.count(f.diff_atom().x)) out.insert(f.diff_atom().x);
      if (!bound.count(f.diff_atom().y)) out.insert(f.diff_atom().y);
      return;
    case MdlKind::BoolConst:
      return;
    case MdlKind::Forall:
    case MdlKind::Exists: {
      bool inserted = bound.insert(f.quant_var()).second;
      collect_free(f.child(0), bound, out);
      if (inserted) bound.erase(f.quant_var());
      return;
    }
    default:
      for (std::size_t i = 0; i < f.child_count(); ++i) collect_free(f.child(i), bound, out);
      return;
  }
}

}  // namespace

std::set<VarId> free_vars(const MdlFormula& f) {
  std::set<VarId> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool has_predicates(const MdlFormula& f) {
  if (f.kind() == MdlKind::Pred) return true;
  for (std::size_t i = 0; i < f.child_count(); ++i) {
    if (has_predicates(f.child(i))) return true;
  }
  return false;
}

std::uint32_t max_pred_index(const MdlFormula& f) {
  std::uint32_t m = f.kind() == MdlKind::Pred ? f.pred_id().index : 0;
  for (std::size_t i = 0; i < f.child_count(); ++i) m = std::max(m, max_pred_index(f.child(i)));
  return m;
}

std::uint32_t max_var_index(const MdlFormula& f) {
  std::uint32_t m = 0;
  switch (f.kind()) {
    case MdlKind::Pred:
      m = f.pred_var().index;
      break;
    case MdlKind::Diff:
      m = std::max(f.diff_atom().x.index, f.diff_atom().y.index);
      break;
    case MdlKind::Forall:
    case MdlKind::Exists:
      m = f.quant_var().index;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < f.child_count(); ++i) m = std::max(m, max_var_index(f.child(i)));
  return m;
}

namespace {

bool check_apart(const MdlFormula& f, std::set<VarId>& seen, const std::set<VarId>& free) {
  if (f.kind() == MdlKind::Forall || f.kind() == MdlKind::Exists) {
    VarId v = f.quant_var();
    if (v.is_zero_var() || free.count(v) || !seen.insert(v).second) return false;
  }
  for (std::size_t i = 0; i < f.child_count(); ++i) {
    if (!check_apart(f.child(i), seen, free)) return false;
  }
  return true;
}

MdlFormula rename(const MdlFormula& f, std::unordered_map<std::uint32_t, VarId>& map, VarSupply& supply) {
  auto lookup = [&](VarId v) {
    auto it = map.find(v.index);
    return it == map.end() ? v : it->second;
  };
  switch (f.kind()) {
    case MdlKind::Pred:
      return MdlFormula::pred(f.pred_id(), lookup(f.pred_var()), f.pred_negated());
    case MdlKind::Diff: {
      DiffAtom a = f.diff_atom();
      a.x = lookup(a.x);
      a.y = lookup(a.y);
      return MdlFormula::diff(a);
    }
    case MdlKind::BoolConst:
      return f;
    case MdlKind::And:
      return MdlFormula::conj(rename(f.child(0), map, supply), rename(f.child(1), map, supply));
    case MdlKind::Or:
      return MdlFormula::disj(rename(f.child(0), map, supply), rename(f.child(1), map, supply));
    case MdlKind::Not:
      return MdlFormula::neg(rename(f.child(0), map, supply));
    case MdlKind::Forall:
    case MdlKind::Exists: {
      VarId fresh = supply.fresh();
      auto saved = map.find(f.quant_var().index);
      auto old = saved == map.end() ? std::optional<VarId>{} : std::optional<VarId>{saved->second};
      map[f.quant_var().index] = fresh;
      MdlFormula body = rename(f.child(0), map, supply);
      if (old) {
        map[f.quant_var().index] = *old;
      } else {
        map.erase(f.quant_var().index);
      }
      return f.kind() == MdlKind::Forall ? MdlFormula::forall(fresh, body) : MdlFormula::exists(fresh, body);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

bool bound_vars_renamed_apart(const MdlFormula& f) {
  std::set<VarId> seen;
  return check_apart(f, seen, free_vars(f));
}

MdlFormula rename_apart(const MdlFormula& f, VarSupply& supply) {
  std::unordered_map<std::uint32_t, VarId> map;
  return rename(f, map, supply);
}

namespace {

void collect_constants(const MdlFormula& f, std::set<Rational>& out) {
  if (f.kind() == MdlKind::Diff) out.insert(f.diff_atom().bound.value);
  for (std::size_t i = 0; i < f.child_count(); ++i) collect_constants(f.child(i), out);
}

}  // namespace

std::set<Rational> atom_constants(const MdlFormula& f) {
  std::set<Rational> out;
  collect_constants(f, out);
  return out;
}

}  // namespace mdlmon
