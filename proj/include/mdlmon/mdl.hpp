#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "mdlmon/bound.hpp"
#include "mdlmon/ids.hpp"
#include "mdlmon/rational.hpp"

namespace mdlmon {

/// Difference constraint x - y <= c (or < c when the bound is strict).
/// `refuted` flips the reading to its negation, which is how the positive
/// form carries negated inequalities without a Not node.
struct DiffAtom {
  VarId x;
  VarId y;
  Bound bound;
  bool refuted = false;

  bool operator==(const DiffAtom&) const = default;
  std::string to_string() const;
};

enum class MdlKind { Pred, Diff, BoolConst, And, Or, Not, Forall, Exists };

/// Immutable syntax tree of monadic difference logic. Boolean constants are
/// admitted as leaves (substitution targets). Shared-node value type.
class MdlFormula {
public:
  static MdlFormula pred(PredId p, VarId v, bool negated = false);
  static MdlFormula diff(DiffAtom a);
  static MdlFormula diff(VarId x, VarId y, Bound b, bool refuted = false);
  static MdlFormula bool_const(bool v);
  static MdlFormula conj(MdlFormula l, MdlFormula r);
  static MdlFormula disj(MdlFormula l, MdlFormula r);
  static MdlFormula neg(MdlFormula f);
  static MdlFormula forall(VarId v, MdlFormula body);
  static MdlFormula exists(VarId v, MdlFormula body);

  MdlKind kind() const;
  PredId pred_id() const;
  VarId pred_var() const;
  bool pred_negated() const;
  const DiffAtom& diff_atom() const;
  bool const_value() const;
  VarId quant_var() const;
  const MdlFormula& child(std::size_t i = 0) const;
  std::size_t child_count() const;

  bool operator==(const MdlFormula& o) const;
  bool operator!=(const MdlFormula& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  struct Node;
  explicit MdlFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Pushes negations to the leaves: the result contains no Not node, negation
/// lives in predicate/diff-atom polarity, quantifiers are dualized.
MdlFormula to_positive_form(const MdlFormula& f);

/// No Not node anywhere.
bool is_positive_form(const MdlFormula& f);

/// Replaces every literal predicate occurrence (both polarities) by the
/// boolean constant `value`. Pre: positive form.
MdlFormula literal_substitute(const MdlFormula& f, bool value);

struct PolaritySets {
  std::set<PredId> positive;  // predicates with an asserted occurrence
  std::set<PredId> negative;  // predicates with a negated occurrence
};

PolaritySets polarity_sets(const MdlFormula& f);

/// True iff no predicate occurs both asserted and negated. Pre: positive form.
bool is_homogeneous(const MdlFormula& f);

std::set<VarId> free_vars(const MdlFormula& f);
bool has_predicates(const MdlFormula& f);
std::uint32_t max_pred_index(const MdlFormula& f);
std::uint32_t max_var_index(const MdlFormula& f);

/// Every quantifier binds a distinct variable, none of them z, and no bound
/// variable also occurs free.
bool bound_vars_renamed_apart(const MdlFormula& f);

/// Rewrites quantifiers to bind fresh variables from the supply.
MdlFormula rename_apart(const MdlFormula& f, VarSupply& supply);

/// All distinct bound values appearing in difference atoms.
std::set<Rational> atom_constants(const MdlFormula& f);

/// Names the 2k literal predicates: asserted P_j is literal j, negated P_j is
/// literal k + j.
struct LiteralIndex {
  std::uint32_t k;

  explicit LiteralIndex(std::uint32_t num_preds) : k(num_preds) {}
  std::uint32_t of(PredId p, bool negated) const { return negated ? k + p.index : p.index; }
  std::pair<PredId, bool> literal(std::uint32_t i) const {
    if (i == 0 || i > 2 * k) throw std::out_of_range("literal index out of range");
    return i <= k ? std::pair{PredId(i), false} : std::pair{PredId(i - k), true};
  }
};

}  // namespace mdlmon
