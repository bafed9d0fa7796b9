#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "mdlmon/bound.hpp"
#include "mdlmon/mdl.hpp"

namespace mdlmon {

/// Node label: a difference test x - y (<|<=) c with position(x) < position(y)
/// in the global variable order (z first, then ascending index). An atom with
/// the positions reversed is expressed through the complement on the false
/// branch, never as a second node family.
struct NormAtom {
  VarId x;
  VarId y;
  Bound bound;

  bool operator==(const NormAtom&) const = default;

  /// Total node order: variable pair lexicographic, then bound value
  /// ascending, then strict before non-strict at equal value.
  bool before(const NormAtom& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    if (bound.value != o.bound.value) return bound.value < o.bound.value;
    return bound.strict && !o.bound.strict;
  }

  std::string to_string() const {
    return x.name() + "-" + y.name() + " " + (bound.strict ? "<" : "<=") + " " + bound.value.to_string();
  }
};

/// (atom, branch) step along a root-to-terminal path; branch false reads the
/// atom's complement.
struct PathStep {
  NormAtom atom;
  bool branch;
};

struct DddPath {
  std::vector<PathStep> steps;
  bool terminal;  // which terminal the path reaches
};

/// Negative-cycle feasibility of a path conjunction, decided on the
/// constraint graph with bound arithmetic (all-pairs closure).
bool path_feasible(const std::vector<PathStep>& steps);

using NodeId = std::uint32_t;
inline constexpr NodeId kFalseNode = 0;
inline constexpr NodeId kTrueNode = 1;

/// Ordered, hash-consed decision graphs over difference atoms, with boolean
/// combinators, existential projection, and the tautology/unsatisfiability
/// tests. Single-owner: one manager per decision, not shared across threads.
class DddManager {
public:
  DddManager();

  NodeId terminal(bool v) const { return v ? kTrueNode : kFalseNode; }
  bool is_terminal(NodeId n) const { return n <= kTrueNode; }

  /// Decision node for the raw atom x - y (<|<=) c; normalizes variable
  /// order, evaluates self-differences to a terminal.
  NodeId atom(VarId x, VarId y, Bound b);
  NodeId diff_atom(const DiffAtom& a);

  NodeId apply_and(NodeId a, NodeId b);
  NodeId apply_or(NodeId a, NodeId b);
  NodeId negate(NodeId a);
  NodeId exists(VarId x, NodeId a);

  /// Recursive construction from a predicate-free formula.
  NodeId build(const MdlFormula& phi);

  /// Build for deciding: requires the formula's free variables to be within
  /// {z}; throws otherwise.
  NodeId build_closed(const MdlFormula& phi);

  /// No feasible path reaches terminal 0.
  bool is_taut(NodeId n) const;
  /// No feasible path reaches terminal 1.
  bool is_unsat(NodeId n) const;

  const NormAtom& node_atom(NodeId n) const;
  NodeId node_high(NodeId n) const;
  NodeId node_low(NodeId n) const;

  /// All root-to-terminal paths (to both terminals).
  std::vector<DddPath> enumerate_paths(NodeId root) const;

  /// Ordering / reducedness / unique-table consistency of the graph under n.
  bool validate(NodeId n) const;

  /// Text export, one non-terminal node per line:
  ///   id: x-y {<=|<} c ? high : low
  /// preceded by a "# root <id>" comment. Terminals 0 and 1 are implicit.
  std::string dump(NodeId root) const;

  std::size_t node_count() const { return nodes_.size() - 2; }
  void clear_caches();

private:
  struct Node {
    NormAtom atom;
    NodeId high;
    NodeId low;
  };

  NodeId mk(const NormAtom& a, NodeId high, NodeId low);
  bool find_path_to(NodeId n, bool terminal, std::vector<PathStep>& prefix) const;

  std::vector<Node> nodes_;  // slots 0 and 1 are terminal placeholders

  struct NodeKey {
    NormAtom atom;
    NodeId high;
    NodeId low;
    bool operator==(const NodeKey&) const = default;
  };
  struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const;
  };
  struct PairHash {
    std::size_t operator()(const std::pair<NodeId, NodeId>& p) const {
      return hash_combine(std::hash<NodeId>{}(p.first), std::hash<NodeId>{}(p.second));
    }
  };

  std::unordered_map<NodeKey, NodeId, NodeKeyHash> unique_;
  std::unordered_map<std::pair<NodeId, NodeId>, NodeId, PairHash> and_cache_;
  std::unordered_map<std::pair<NodeId, NodeId>, NodeId, PairHash> or_cache_;
  std::unordered_map<NodeId, NodeId> neg_cache_;
};

}  // namespace mdlmon
