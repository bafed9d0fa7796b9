#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mdlmon/ids.hpp"
#include "mdlmon/rational.hpp"

namespace mdlmon {

enum class BtlKind {
  Prop,
  And,
  Or,
  Not,
  Implies,
  Iff,
  Always,           // always[c]
  Eventually,       // eventually[c]
  AlwaysUnbounded,  // always
  After,            // after[c]
  Between,          // between[c,d]
  UntilExact,       // lhs U[=c] rhs
  Until,            // lhs U rhs
};

/// Immutable syntax tree of the bounded temporal logic. Shared-node value
/// type: copies are cheap, nodes are never mutated.
class BtlFormula {
public:
  static BtlFormula prop(PropId p);
  static BtlFormula conj(BtlFormula l, BtlFormula r);
  static BtlFormula disj(BtlFormula l, BtlFormula r);
  static BtlFormula neg(BtlFormula f);
  static BtlFormula implies(BtlFormula l, BtlFormula r);
  static BtlFormula iff(BtlFormula l, BtlFormula r);
  static BtlFormula always(Rational c, BtlFormula f);
  static BtlFormula eventually(Rational c, BtlFormula f);
  static BtlFormula always_unbounded(BtlFormula f);
  static BtlFormula after(Rational c, BtlFormula f);
  static BtlFormula between(Rational c, Rational d, BtlFormula f);
  static BtlFormula until_exact(Rational c, BtlFormula l, BtlFormula r);
  static BtlFormula until(BtlFormula l, BtlFormula r);

  BtlKind kind() const;
  PropId prop_id() const;
  const Rational& bound() const;        // c of the bounded modalities
  const Rational& upper_bound() const;  // d of between
  const BtlFormula& child(std::size_t i = 0) const;
  std::size_t child_count() const;

  bool operator==(const BtlFormula& o) const;
  bool operator!=(const BtlFormula& o) const { return !(*this == o); }

  std::string to_string() const;

  /// Largest proposition index used, 0 when none.
  std::uint32_t max_prop_index() const;

  /// Nesting depth of the modal operators (0 for purely propositional).
  std::size_t modal_depth() const;

private:
  struct Node;
  explicit BtlFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace mdlmon
