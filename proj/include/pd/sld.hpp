#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pd/orders.hpp"
#include "pd/terms.hpp"

namespace pd {

enum class Strategy { depth_bound, determinate, shower, fork, beam, ecce };

struct LocalConfig {
  Strategy strategy = Strategy::ecce;
  int depth = 1;      // depth_bound: nondeterminate levels
  int lookahead = 1;  // determinate: 0 or 1; the other shapes use 1
  OrderKind safety_order;
  bool leftmost_only = false;
  std::size_t neg_budget = 1000;
  // Resolution steps one tree may spend before open branches are left
  // incomplete.
  std::size_t max_tree_steps = 200000;
  UnifyOptions unify;
};

struct StepTag {
  enum class Kind { clause, builtin, negation };
  Kind kind = Kind::clause;
  int clause = 0;
  std::string builtin;

  static StepTag of_clause(int id) { return {Kind::clause, id, {}}; }
  static StepTag of_builtin(std::string name) { return {Kind::builtin, 0, std::move(name)}; }
  static StepTag of_negation() { return {Kind::negation, 0, {}}; }
  std::string str() const;

  friend bool operator==(const StepTag&, const StepTag&) = default;
  friend auto operator<=>(const StepTag&, const StepTag&) = default;
};

enum class NodeStatus { inner, success, fail, incomplete };
const char* to_string(NodeStatus s);

struct SldEdge {
  StepTag tag;
  Substitution mgu;
  std::size_t child = 0;
};

struct SldNode {
  Conjunction goal;
  Conjunction head;  // root under the composed mgus of the path so far
  std::optional<std::size_t> parent;
  std::optional<std::size_t> selected;  // 0-based
  NodeStatus status = NodeStatus::incomplete;
  std::vector<SldEdge> children;
  // Covering ancestor sequence of the selected atom, ending with the atom.
  std::vector<Literal> covering;
};

struct SldTree {
  Conjunction root;
  std::vector<SldNode> nodes;  // nodes[0] is the root
  std::size_t steps = 0;       // includes steps spent in subsidiary trees
};

struct Resultant {
  Conjunction head;
  Conjunction body;
};

// Covering-ancestor bookkeeping: each goal literal points at the selected
// atom whose clause body introduced it.
struct AncestorLink {
  Literal atom;
  std::shared_ptr<const AncestorLink> parent;
};
using AncestorRef = std::shared_ptr<const AncestorLink>;

struct GoalItem {
  Literal lit;
  AncestorRef anc;
};

std::vector<Literal> covering_ancestors(const AncestorRef& anc, const Sig& pred);

struct BranchState {
  bool root = true;
  bool nondet_used = false;
  bool stopped = false;  // after the final nondeterminate step only failure is detected
  int depth_used = 0;
  WfoConfig wfo;
};

struct Selection {
  std::size_t position = 0;
  BranchState next;  // state for the children
};

// Picks the literal to unfold next, or nullopt to stop the branch.
std::optional<Selection> select_literal(const std::vector<GoalItem>& goal, const BranchState& st,
                                        const LocalConfig& cfg, const Program& p, VarFactory& vf);

SldTree unfold(const Program& p, const Conjunction& root, const LocalConfig& cfg, VarFactory& vf);

// Indices of the leaves of non-failing branches, left to right.
std::vector<std::size_t> branch_leaves(const SldTree& t);
std::vector<Resultant> resultants(const SldTree& t);
std::vector<Conjunction> leaves(const SldTree& t);
// Steps from the root to `node`, as (selected position, tag) pairs.
std::vector<std::pair<std::size_t, StepTag>> path_steps(const SldTree& t, std::size_t node);

}  // namespace pd
