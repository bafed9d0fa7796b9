#include "mdlmon/ddd.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace mdlmon {

// ---------------------------------------------------------------------------
// Path feasibility: all-pairs closure on the constraint graph
// ---------------------------------------------------------------------------

bool path_feasible(const std::vector<PathStep>& steps) {
  // Collect the constraints in positive reading.
  struct Con {
    VarId x, y;
    Bound b;
  };
  std::vector<Con> cons;
  std::set<VarId> varset;
  for (const auto& s : steps) {
    Con c{s.atom.x, s.atom.y, s.atom.bound};
    if (!s.branch) c = Con{c.y, c.x, Bound{-c.b.value, !c.b.strict}};
    cons.push_back(c);
    varset.insert(c.x);
    varset.insert(c.y);
  }
  std::vector<VarId> vars(varset.begin(), varset.end());
  std::size_t n = vars.size();
  auto index_of = [&](VarId v) {
    return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  };
  // m[i][j] = tightest known bound on x_i - x_j.
  std::vector<std::vector<std::optional<Bound>>> m(n, std::vector<std::optional<Bound>>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Bound{Rational(0), false};
  for (const auto& c : cons) {
    std::size_t i = index_of(c.x), j = index_of(c.y);
    if (i == j) {
      if (!c.b.satisfied_by_zero()) return false;
      continue;
    }
    if (!m[i][j] || c.b.tighter_than(*m[i][j])) m[i][j] = c.b;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!m[k][j]) continue;
        Bound through = *m[i][k] + *m[k][j];
        if (!m[i][j] || through.tighter_than(*m[i][j])) m[i][j] = through;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i]->tighter_than(Bound{Rational(0), false})) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Manager
// ---------------------------------------------------------------------------

std::size_t DddManager::NodeKeyHash::operator()(const NodeKey& k) const {
  std::size_t h = hash_combine(std::hash<std::uint32_t>{}(k.atom.x.index), std::hash<std::uint32_t>{}(k.atom.y.index));
  h = hash_combine(h, k.atom.bound.hash());
  h = hash_combine(h, std::hash<NodeId>{}(k.high));
  return hash_combine(h, std::hash<NodeId>{}(k.low));
}

DddManager::DddManager() {
  nodes_.resize(2);  // terminal placeholders
}

NodeId DddManager::mk(const NormAtom& a, NodeId high, NodeId low) {
  if (high == low) return high;
  NodeKey key{a, high, low};
  auto it = unique_.find(key);
  if (it != unique_.end()) return it->second;
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{a, high, low});
  unique_.emplace(key, id);
  return id;
}

NodeId DddManager::atom(VarId x, VarId y, Bound b) {
  if (x == y) return terminal(b.satisfied_by_zero());
  if (x < y) return mk(NormAtom{x, y, b}, kTrueNode, kFalseNode);
  // x - y <= c reads as the complement of y - x < -c.
  return mk(NormAtom{y, x, Bound{-b.value, !b.strict}}, kFalseNode, kTrueNode);
}

NodeId DddManager::diff_atom(const DiffAtom& a) {
  NodeId n = atom(a.x, a.y, a.bound);
  return a.refuted ? negate(n) : n;
}

NodeId DddManager::apply_and(NodeId a, NodeId b) {
  if (a == kFalseNode || b == kFalseNode) return kFalseNode;
  if (a == kTrueNode) return b;
  if (b == kTrueNode) return a;
  if (a == b) return a;
  if (a > b) std::swap(a, b);
  auto it = and_cache_.find({a, b});
  if (it != and_cache_.end()) return it->second;

  // Copy the atoms: recursive calls may grow the node vector.
  const NormAtom aa = nodes_[a].atom;
  const NormAtom ab = nodes_[b].atom;
  const NormAtom top = aa.before(ab) ? aa : ab;
  NodeId ah = a, al = a, bh = b, bl = b;
  if (aa == top) {
    ah = nodes_[a].high;
    al = nodes_[a].low;
  }
  if (ab == top) {
    bh = nodes_[b].high;
    bl = nodes_[b].low;
  }
  NodeId hi = apply_and(ah, bh);
  NodeId lo = apply_and(al, bl);
  NodeId r = mk(top, hi, lo);
  and_cache_.emplace(std::pair{a, b}, r);
  return r;
}

NodeId DddManager::apply_or(NodeId a, NodeId b) {
  if (a == kTrueNode || b == kTrueNode) return kTrueNode;
  if (a == kFalseNode) return b;
  if (b == kFalseNode) return a;
  if (a == b) return a;
  if (a > b) std::swap(a, b);
  auto it = or_cache_.find({a, b});
  if (it != or_cache_.end()) return it->second;

  const NormAtom aa = nodes_[a].atom;
  const NormAtom ab = nodes_[b].atom;
  const NormAtom top = aa.before(ab) ? aa : ab;
  NodeId ah = a, al = a, bh = b, bl = b;
  if (aa == top) {
    ah = nodes_[a].high;
    al = nodes_[a].low;
  }
  if (ab == top) {
    bh = nodes_[b].high;
    bl = nodes_[b].low;
  }
  NodeId hi = apply_or(ah, bh);
  NodeId lo = apply_or(al, bl);
  NodeId r = mk(top, hi, lo);
  or_cache_.emplace(std::pair{a, b}, r);
  return r;
}

NodeId DddManager::negate(NodeId a) {
  if (a == kFalseNode) return kTrueNode;
  if (a == kTrueNode) return kFalseNode;
  auto it = neg_cache_.find(a);
  if (it != neg_cache_.end()) return it->second;
  const Node nd = nodes_[a];
  NodeId hi = negate(nd.high);
  NodeId lo = negate(nd.low);
  NodeId r = mk(nd.atom, hi, lo);
  neg_cache_.emplace(a, r);
  return r;
}

NodeId DddManager::exists(VarId x, NodeId a) {
  if (x.is_zero_var()) throw std::invalid_argument("cannot project the zero variable");
  if (is_terminal(a)) return a;

  // Enumerate feasible 1-paths, eliminate x per path, disjoin the rebuilt
  // path conjunctions.
  NodeId result = kFalseNode;
  std::vector<PathStep> steps;
  auto rebuild = [&](const std::vector<PathStep>& path) {
    // Positive reading of the path constraints.
    struct Con {
      VarId cx, cy;
      Bound b;
    };
    std::vector<Con> cons;
    for (const auto& s : path) {
      if (s.branch) {
        cons.push_back({s.atom.x, s.atom.y, s.atom.bound});
      } else {
        cons.push_back({s.atom.y, s.atom.x, Bound{-s.atom.bound.value, !s.atom.bound.strict}});
      }
    }
    std::vector<Con> uppers, lowers, rest;
    for (const auto& c : cons) {
      if (c.cx == x && c.cy == x) continue;  // cannot occur (atoms have distinct vars)
      if (c.cx == x) {
        uppers.push_back(c);
      } else if (c.cy == x) {
        lowers.push_back(c);
      } else {
        rest.push_back(c);
      }
    }
    for (const auto& up : uppers) {
      for (const auto& lo : lowers) {
        rest.push_back({lo.cx, up.cy, up.b + lo.b});
      }
    }
    NodeId conj = kTrueNode;
    for (const auto& c : rest) conj = apply_and(conj, atom(c.cx, c.cy, c.b));
    return conj;
  };

  // Depth-first over the graph with feasibility pruning.
  auto dfs = [&](auto&& self, NodeId n) -> void {
    if (n == kFalseNode) return;
    if (n == kTrueNode) {
      result = apply_or(result, rebuild(steps));
      return;
    }
    for (bool branch : {true, false}) {
      steps.push_back({nodes_[n].atom, branch});
      if (path_feasible(steps)) self(self, branch ? nodes_[n].high : nodes_[n].low);
      steps.pop_back();
    }
  };
  dfs(dfs, a);
  return result;
}

NodeId DddManager::build(const MdlFormula& phi) {
  switch (phi.kind()) {
    case MdlKind::Pred:
      throw std::invalid_argument("cannot build a diagram over monadic predicates");
    case MdlKind::Diff:
      return diff_atom(phi.diff_atom());
    case MdlKind::BoolConst:
      return terminal(phi.const_value());
    case MdlKind::And:
      return apply_and(build(phi.child(0)), build(phi.child(1)));
    case MdlKind::Or:
      return apply_or(build(phi.child(0)), build(phi.child(1)));
    case MdlKind::Not:
      return negate(build(phi.child(0)));
    case MdlKind::Exists:
      return exists(phi.quant_var(), build(phi.child(0)));
    case MdlKind::Forall:
      return negate(exists(phi.quant_var(), negate(build(phi.child(0)))));
  }
  throw std::logic_error("unreachable");
}

NodeId DddManager::build_closed(const MdlFormula& phi) {
  for (const auto& v : free_vars(phi)) {
    if (!v.is_zero_var()) {
      throw std::invalid_argument("formula to decide has free variable " + v.name());
    }
  }
  return build(phi);
}

const NormAtom& DddManager::node_atom(NodeId n) const {
  if (is_terminal(n)) throw std::logic_error("terminal has no atom");
  return nodes_.at(n).atom;
}

NodeId DddManager::node_high(NodeId n) const {
  if (is_terminal(n)) throw std::logic_error("terminal has no branches");
  return nodes_.at(n).high;
}

NodeId DddManager::node_low(NodeId n) const {
  if (is_terminal(n)) throw std::logic_error("terminal has no branches");
  return nodes_.at(n).low;
}

bool DddManager::find_path_to(NodeId n, bool terminal_value, std::vector<PathStep>& prefix) const {
  if (is_terminal(n)) return n == terminal(terminal_value);
  for (bool branch : {true, false}) {
    prefix.push_back({nodes_[n].atom, branch});
    if (path_feasible(prefix) && find_path_to(branch ? nodes_[n].high : nodes_[n].low, terminal_value, prefix)) {
      return true;
    }
    prefix.pop_back();
  }
  return false;
}

bool DddManager::is_taut(NodeId n) const {
  std::vector<PathStep> prefix;
  return !find_path_to(n, false, prefix);
}

bool DddManager::is_unsat(NodeId n) const {
  std::vector<PathStep> prefix;
  return !find_path_to(n, true, prefix);
}

std::vector<DddPath> DddManager::enumerate_paths(NodeId root) const {
  std::vector<DddPath> out;
  std::vector<PathStep> steps;
  auto dfs = [&](auto&& self, NodeId n) -> void {
    if (is_terminal(n)) {
      out.push_back(DddPath{steps, n == kTrueNode});
      return;
    }
    for (bool branch : {true, false}) {
      steps.push_back({nodes_[n].atom, branch});
      self(self, branch ? nodes_[n].high : nodes_[n].low);
      steps.pop_back();
    }
  };
  dfs(dfs, root);
  return out;
}

bool DddManager::validate(NodeId root) const {
  std::set<NodeId> seen;
  auto dfs = [&](auto&& self, NodeId n) -> bool {
    if (is_terminal(n)) return true;
    if (n >= nodes_.size()) return false;
    if (!seen.insert(n).second) return true;
    const Node& nd = nodes_[n];
    if (nd.high == nd.low) return false;
    for (NodeId child : {nd.high, nd.low}) {
      if (!is_terminal(child) && !nd.atom.before(nodes_[child].atom)) return false;
    }
    auto it = unique_.find(NodeKey{nd.atom, nd.high, nd.low});
    if (it == unique_.end() || it->second != n) return false;
    return self(self, nd.high) && self(self, nd.low);
  };
  return dfs(dfs, root);
}

std::string DddManager::dump(NodeId root) const {
  std::string out = "# root " + std::to_string(root) + "\n";
  std::set<NodeId> seen;
  auto dfs = [&](auto&& self, NodeId n) -> void {
    if (is_terminal(n) || !seen.insert(n).second) return;
    const Node& nd = nodes_[n];
    out += std::to_string(n) + ": " + nd.atom.to_string() + " ? " + std::to_string(nd.high) + " : " +
           std::to_string(nd.low) + "\n";
    self(self, nd.high);
    self(self, nd.low);
  };
  dfs(dfs, root);
  return out;
}

void DddManager::clear_caches() {
  and_cache_.clear();
  or_cache_.clear();
  neg_cache_.clear();
}

}  // namespace mdlmon
