#include "mdlmon/btl.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdlmon {

struct BtlFormula::Node {
  BtlKind kind;
  PropId prop{1};
  Rational c;
  Rational d;
  std::vector<BtlFormula> children;
};

namespace {

void require_nonnegative(const Rational& c) {
  if (c.is_negative()) throw std::invalid_argument("temporal bound must be non-negative");
}

}  // namespace

BtlFormula BtlFormula::prop(PropId p) {
  return BtlFormula(std::make_shared<Node>(Node{BtlKind::Prop, p, {}, {}, {}}));
}

BtlFormula BtlFormula::conj(BtlFormula l, BtlFormula r) {
  return BtlFormula(std::make_shared<Node>(Node{BtlKind::And, PropId(1), {}, {}, {std::move(l), std::move(r)}}));
}

BtlFormula BtlFormula::disj(BtlFormula l, BtlFormula r) {
  return BtlFormula(std::make_shared<Node>(Node{BtlKind::Or, PropId(1), {}, {}, {std::move(l), std::move(r)}}));
}

BtlFormula BtlFormula::neg(BtlFormula f) {
  return BtlFormula(std::make_shared<Node>(Node{BtlKind::Not, PropId(1), {}, {}, {std::move(f)}}));
}

BtlFormula BtlFormula::implies(BtlFormula l, BtlFormula r) {
  return BtlFormula(std::make_shared<Node>(Node{BtlKind::Implies, PropId(1), {}, {}, {std::move(l), std::move(r)}}));
}

BtlFormula BtlFormula::iff(BtlFormula l, BtlFormula r) {
  return BtlFormula(std::make_shared<Node>(Node{BtlKind::Iff, PropId(1), {}, {}, {std::move(l), std::move(r)}}));
}

BtlFormula BtlFormula::always(Rational c, BtlFormula f) {
  require_nonnegative(c);
  return BtlFormula(std::make_shared<Node>(Node{BtlKind::Always, PropId(1), std::move(c), {}, {std::move(f)}}));
}

BtlFormula BtlFormula::eventually(Rational c, BtlFormula f) {
  require_nonnegative(c);
  return BtlFormula(std::make_shared<Node>(Node{BtlKind::Eventually, PropId(1), std::move(c), {}, {std::move(f)}}));
}

BtlFormula BtlFormula::always_unbounded(BtlFormula f) {
  return BtlFormula(std::make_shared<Node>(Node{BtlKind::AlwaysUnbounded, PropId(1), {}, {}, {std::move(f)}}));
}

BtlFormula BtlFormula::after(Rational c, BtlFormula f) {
  require_nonnegative(c);
  return BtlFormula(std::make_shared<Node>(Node{BtlKind::After, PropId(1), std::move(c), {}, {std::move(f)}}));
}

BtlFormula BtlFormula::between(Rational c, Rational d, BtlFormula f) {
  require_nonnegative(c);
  require_nonnegative(d);
  if (d < c) throw std::invalid_argument("between[c,d] requires c <= d");
  return BtlFormula(std::make_shared<Node>(Node{BtlKind::Between, PropId(1), std::move(c), std::move(d), {std::move(f)}}));
}

BtlFormula BtlFormula::until_exact(Rational c, BtlFormula l, BtlFormula r) {
  require_nonnegative(c);
  return BtlFormula(
      std::make_shared<Node>(Node{BtlKind::UntilExact, PropId(1), std::move(c), {}, {std::move(l), std::move(r)}}));
}

BtlFormula BtlFormula::until(BtlFormula l, BtlFormula r) {
  return BtlFormula(std::make_shared<Node>(Node{BtlKind::Until, PropId(1), {}, {}, {std::move(l), std::move(r)}}));
}

BtlKind BtlFormula::kind() const { return node_->kind; }

PropId BtlFormula::prop_id() const {
  if (node_->kind != BtlKind::Prop) throw std::logic_error("prop_id on non-atom");
  return node_->prop;
}

const Rational& BtlFormula::bound() const { return node_->c; }
const Rational& BtlFormula::upper_bound() const { return node_->d; }

const BtlFormula& BtlFormula::child(std::size_t i) const { return node_->children.at(i); }
std::size_t BtlFormula::child_count() const { return node_->children.size(); }

bool BtlFormula::operator==(const BtlFormula& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case BtlKind::Prop:
      return node_->prop == o.node_->prop;
    case BtlKind::Always:
    case BtlKind::Eventually:
    case BtlKind::After:
    case BtlKind::UntilExact:
      if (node_->c != o.node_->c) return false;
      break;
    case BtlKind::Between:
      if (node_->c != o.node_->c || node_->d != o.node_->d) return false;
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

bool is_atom(const BtlFormula& f) { return f.kind() == BtlKind::Prop; }

std::string wrap(const BtlFormula& f) {
  if (is_atom(f)) return f.to_string();
  return "(" + f.to_string() + ")";
}

}  // namespace

std::string BtlFormula::to_string() const {
  switch (node_->kind) {
    case BtlKind::Prop:
      return node_->prop.name();
    case BtlKind::And:
      return wrap(node_->children[0]) + " & " + wrap(node_->children[1]);
    case BtlKind::Or:
      return wrap(node_->children[0]) + " | " + wrap(node_->children[1]);
    case BtlKind::Not:
      return "!" + wrap(node_->children[0]);
    case BtlKind::Implies:
      return wrap(node_->children[0]) + " -> " + wrap(node_->children[1]);
    case BtlKind::Iff:
      return wrap(node_->children[0]) + " <-> " + wrap(node_->children[1]);
    case BtlKind::Always:
      return "always[" + node_->c.to_string() + "] " + wrap(node_->children[0]);
    case BtlKind::Eventually:
      return "eventually[" + node_->c.to_string() + "] " + wrap(node_->children[0]);
    case BtlKind::AlwaysUnbounded:
      return "always " + wrap(node_->children[0]);
    case BtlKind::After:
      return "after[" + node_->c.to_string() + "] " + wrap(node_->children[0]);
    case BtlKind::Between:
      return "between[" + node_->c.to_string() + "," + node_->d.to_string() + "] " + wrap(node_->children[0]);
    case BtlKind::UntilExact:
      return wrap(node_->children[0]) + " U[=" + node_->c.to_string() + "] " + wrap(node_->children[1]);
    case BtlKind::Until:
      return wrap(node_->children[0]) + " U " + wrap(node_->children[1]);
  }
  return "?";
}

std::uint32_t BtlFormula::max_prop_index() const {
  if (node_->kind == BtlKind::Prop) return node_->prop.index;
  std::uint32_t m = 0;
  for (const auto& c : node_->children) m = std::max(m, c.max_prop_index());
  return m;
}

std::size_t BtlFormula::modal_depth() const {
  std::size_t m = 0;
  for (const auto& c : node_->children) m = std::max(m, c.modal_depth());
  switch (node_->kind) {
    case BtlKind::Always:
    case BtlKind::Eventually:
    case BtlKind::AlwaysUnbounded:
    case BtlKind::After:
    case BtlKind::Between:
    case BtlKind::UntilExact:
    case BtlKind::Until:
      return m + 1;
    default:
      return m;
  }
}

}  // namespace mdlmon
