#include "pd/sld.hpp"

#include <algorithm>
#include <map>

#include "pd/builtins.hpp"
#include "pd/syntax.hpp"

namespace pd {

std::string StepTag::str() const {
  switch (kind) {
    case Kind::clause: return std::to_string(clause);
    case Kind::builtin: return builtin;
    case Kind::negation: return "not";
  }
  return "?";
}

const char* to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::inner: return "inner";
    case NodeStatus::success: return "success";
    case NodeStatus::fail: return "fail";
    case NodeStatus::incomplete: return "incomplete";
  }
  return "?";
}

std::vector<Literal> covering_ancestors(const AncestorRef& anc, const Sig& pred) {
  std::vector<Literal> out;
  for (const AncestorLink* a = anc.get(); a; a = a->parent.get())
    if (!a->atom.negative && a->atom.sig() == pred) out.push_back(a->atom);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

struct Outcome {
  StepTag tag;
  Substitution mgu;
  std::vector<GoalItem> replacement;
};

// nullopt: the literal cannot be selected now.
using Expansion = std::optional<std::vector<Outcome>>;

enum class NegResult { refuted, failed, unknown };

struct Choice {
  std::size_t pos = 0;
  BranchState next;
  std::vector<Outcome> outcomes;
};

std::vector<GoalItem> resolvent(const std::vector<GoalItem>& goal, std::size_t pos, const Outcome& o) {
  std::vector<GoalItem> out;
  out.reserve(goal.size() + o.replacement.size());
  auto push = [&](const GoalItem& g) { out.push_back(GoalItem{apply(g.lit, o.mgu), g.anc}); };
  for (std::size_t i = 0; i < pos; ++i) push(goal[i]);
  for (const auto& g : o.replacement) push(g);
  for (std::size_t i = pos + 1; i < goal.size(); ++i) push(goal[i]);
  return out;
}

bool is_user_atom(const Literal& l) { return !l.negative && !is_builtin(l.sig()); }

class Session {
 public:
  Session(const Program& p, const LocalConfig& cfg, VarFactory& vf) : p_(p), cfg_(cfg), vf_(vf) {}

  std::size_t steps = 0;

  Expansion expand(const GoalItem& item) {
    const Literal& l = item.lit;
    if (l.negative) {
      if (!l.atom.is_ground()) return std::nullopt;
      switch (negation(l.atom)) {
        case NegResult::refuted: return std::vector<Outcome>{};
        case NegResult::failed: return std::vector<Outcome>{Outcome{StepTag::of_negation(), {}, {}}};
        case NegResult::unknown: return std::nullopt;
      }
    }
    Sig s = l.sig();
    if (is_builtin(s)) {
      BuiltinStep b = eval_builtin(l.atom, false, cfg_.unify);
      if (b.result == BuiltinEval::residual) return std::nullopt;
      std::vector<Outcome> out;
      if (b.result == BuiltinEval::success) {
        Outcome o{StepTag::of_builtin(s.name), std::move(b.mgu), {}};
        if (b.replacement) o.replacement.push_back(GoalItem{*b.replacement, item.anc});
        out.push_back(std::move(o));
      }
      return out;
    }
    if (p_.is_open(s)) return std::nullopt;
    std::vector<Outcome> out;
    AncestorRef link;
    for (std::size_t idx : p_.clauses_for(s)) {
      Clause c = rename_apart(p_.clauses[idx], vf_);
      auto m = unify(l.atom, c.head, cfg_.unify);
      if (!m) continue;
      if (!link) link = std::make_shared<const AncestorLink>(AncestorLink{l, item.anc});
      Outcome o{StepTag::of_clause(c.id), std::move(*m), {}};
      for (auto& b : c.body) o.replacement.push_back(GoalItem{std::move(b), link});
      out.push_back(std::move(o));
    }
    return out;
  }

  // True when some literal of the goal is known to fail in one step.
  bool quick_fails(const std::vector<GoalItem>& goal) {
    for (const auto& g : goal) {
      const Literal& l = g.lit;
      if (l.negative) continue;
      Sig s = l.sig();
      if (is_builtin(s)) {
        if (eval_builtin(l.atom, false, cfg_.unify).result == BuiltinEval::failure) return true;
        continue;
      }
      if (p_.is_open(s)) continue;
      bool any = false;
      for (std::size_t idx : p_.clauses_for(s)) {
        Term head = rename_fresh(p_.clauses[idx].head, vf_);
        if (unify(l.atom, head, cfg_.unify)) {
          any = true;
          break;
        }
      }
      if (!any) return true;
    }
    return false;
  }

  bool safe(const GoalItem& item, WfoConfig& wfo) {
    if (!is_user_atom(item.lit)) return true;
    auto cov = covering_ancestors(item.anc, item.lit.sig());
    if (cov.empty()) return true;
    OrderKind kind = cfg_.safety_order;
    kind.wfo = wfo;
    FunctorClass fc{&p_.static_functors};
    if (admissible_extension(cov, item.lit, kind, fc)) return true;
    if (kind.type != OrderType::termsize_wfo) return false;
    cov.push_back(item.lit);
    auto refined = refine_wfo(cov, wfo);
    if (!refined) return false;
    wfo = *refined;
    return true;
  }

  std::optional<Choice> select(const std::vector<GoalItem>& goal, const BranchState& st) {
    std::vector<std::optional<Expansion>> cache(goal.size());
    auto ev = [&](std::size_t i) -> Expansion& {
      if (!cache[i]) cache[i] = expand(goal[i]);
      return *cache[i];
    };
    std::vector<std::size_t> candidates;
    if (cfg_.leftmost_only)
      candidates.push_back(0);
    else
      for (std::size_t i = 0; i < goal.size(); ++i) candidates.push_back(i);

    BranchState next = st;
    next.root = false;
    auto take = [&](std::size_t i, BranchState ns) {
      return Choice{i, std::move(ns), std::move(*ev(i))};
    };

    // Failure detection may look anywhere in the goal.
    for (std::size_t i = 0; i < goal.size(); ++i) {
      if (goal[i].lit.negative) continue;
      auto& e = ev(i);
      if (e && e->empty()) return take(i, next);
    }

    auto determinate = [&](std::size_t i, int lookahead) {
      auto& e = ev(i);
      if (!e) return false;
      if (e->size() <= 1) return true;
      if (lookahead == 0) return false;
      int survivors = 0;
      for (const auto& o : *e)
        if (!quick_fails(resolvent(goal, i, o)) && ++survivors > 1) return false;
      return true;
    };
    auto leftmost_selectable = [&]() -> std::optional<std::size_t> {
      for (std::size_t i : candidates)
        if (ev(i)) return i;
      return std::nullopt;
    };
    auto branching = [&](std::size_t i) { return ev(i)->size() > 1; };
    auto det_step = [&](int lookahead, bool mark_branching) -> std::optional<Choice> {
      for (std::size_t i : candidates) {
        if (!determinate(i, lookahead)) continue;
        BranchState ns = next;
        if (!safe(goal[i], ns.wfo)) continue;
        if (mark_branching && !st.root && branching(i)) ns.nondet_used = true;
        return take(i, std::move(ns));
      }
      return std::nullopt;
    };
    auto forced_root = [&]() -> std::optional<Choice> {
      if (!st.root) return std::nullopt;
      auto i = leftmost_selectable();
      if (!i) return std::nullopt;
      return take(*i, next);
    };

    switch (cfg_.strategy) {
      case Strategy::ecce: {
        if (!st.stopped)
          if (auto c = det_step(1, true)) return c;
        if (st.root) return forced_root();
        if (st.nondet_used) return std::nullopt;
        auto i = leftmost_selectable();
        if (!i) return std::nullopt;
        BranchState ns = next;
        if (!safe(goal[*i], ns.wfo)) return std::nullopt;
        ns.nondet_used = ns.stopped = true;
        return take(*i, std::move(ns));
      }
      case Strategy::determinate:
      case Strategy::shower: {
        int la = cfg_.strategy == Strategy::shower ? 1 : cfg_.lookahead;
        if (auto c = det_step(la, false)) return c;
        return forced_root();
      }
      case Strategy::fork:
      case Strategy::beam: {
        if (!st.stopped)
          if (auto c = det_step(1, false)) return c;
        if (st.nondet_used) return std::nullopt;
        auto i = leftmost_selectable();
        if (!i) return std::nullopt;
        BranchState ns = next;
        if (!st.root && !safe(goal[*i], ns.wfo)) return std::nullopt;
        if (branching(*i)) {
          ns.nondet_used = true;
          ns.stopped = cfg_.strategy == Strategy::fork;
        }
        return take(*i, std::move(ns));
      }
      case Strategy::depth_bound: {
        auto i = leftmost_selectable();
        if (!i) return std::nullopt;
        BranchState ns = next;
        if (!branching(*i)) {
          if (!st.root && !safe(goal[*i], ns.wfo)) return std::nullopt;
          return take(*i, std::move(ns));
        }
        if (ns.depth_used >= cfg_.depth) return std::nullopt;
        ++ns.depth_used;
        return take(*i, std::move(ns));
      }
    }
    return std::nullopt;
  }

  SldTree unfold(const Conjunction& root) {
    SldTree t;
    t.root = root;
    t.nodes.push_back(SldNode{root, root, std::nullopt, std::nullopt, NodeStatus::incomplete, {}, {}});
    struct Pending {
      std::size_t node;
      std::vector<GoalItem> items;
      BranchState st;
    };
    BranchState init;
    init.wfo = cfg_.safety_order.wfo;
    std::vector<GoalItem> items;
    for (const auto& l : root) items.push_back(GoalItem{l, nullptr});
    std::vector<Pending> stack;
    stack.push_back(Pending{0, std::move(items), std::move(init)});

    while (!stack.empty()) {
      Pending cur = std::move(stack.back());
      stack.pop_back();
      std::size_t id = cur.node;
      if (cur.items.empty()) {
        t.nodes[id].status = NodeStatus::success;
        continue;
      }
      if (steps >= cfg_.max_tree_steps) continue;
      auto choice = select(cur.items, cur.st);
      if (!choice) continue;
      const GoalItem& sel = cur.items[choice->pos];
      t.nodes[id].selected = choice->pos;
      if (is_user_atom(sel.lit)) {
        t.nodes[id].covering = covering_ancestors(sel.anc, sel.lit.sig());
        t.nodes[id].covering.push_back(sel.lit);
      }
      if (choice->outcomes.empty()) {
        t.nodes[id].status = NodeStatus::fail;
        continue;
      }
      t.nodes[id].status = NodeStatus::inner;
      std::vector<Pending> kids;
      for (auto& o : choice->outcomes) {
        ++steps;
        auto child_items = resolvent(cur.items, choice->pos, o);
        Conjunction goal;
        for (const auto& g : child_items) goal.push_back(g.lit);
        std::size_t cid = t.nodes.size();
        Conjunction head = pd::apply(t.nodes[id].head, o.mgu);
        t.nodes.push_back(SldNode{std::move(goal), std::move(head), id, std::nullopt,
                                  NodeStatus::incomplete, {}, {}});
        t.nodes[id].children.push_back(SldEdge{o.tag, std::move(o.mgu), cid});
        kids.push_back(Pending{cid, std::move(child_items), choice->next});
      }
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
    }
    t.steps = steps;
    return t;
  }

 private:
  NegResult negation(const Term& atom) {
    if (budget_) return decide(atom, *budget_);
    if (auto it = neg_cache_.find(atom); it != neg_cache_.end()) return it->second;
    std::size_t budget = cfg_.neg_budget;
    budget_ = &budget;
    NegResult r = decide(atom, budget);
    budget_ = nullptr;
    neg_cache_.emplace(atom, r);
    return r;
  }

  // Subsidiary tree for a ground atom: any success refutes the negation; all
  // branches failing proves it. Unsafe or stuck branches leave it undecided.
  NegResult decide(const Term& atom, std::size_t& budget) {
    struct Frame {
      std::vector<GoalItem> items;
      WfoConfig wfo;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{{GoalItem{pos(atom), nullptr}}, cfg_.safety_order.wfo});
    bool unknown = false;
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (f.items.empty()) return NegResult::refuted;
      if (budget == 0) {
        unknown = true;
        continue;
      }
      std::optional<std::size_t> pick;
      std::vector<std::optional<Expansion>> cache(f.items.size());
      bool failed = false;
      for (std::size_t i = 0; i < f.items.size() && !failed; ++i) {
        cache[i] = expand(f.items[i]);
        if (*cache[i] && (*cache[i])->empty()) failed = true;
        if (*cache[i] && !pick) pick = i;
      }
      if (failed) continue;
      if (!pick || !safe(f.items[*pick], f.wfo)) {
        unknown = true;
        continue;
      }
      auto& outs = **cache[*pick];
      steps += outs.size();
      budget -= std::min(budget, outs.size());
      for (auto it = outs.rbegin(); it != outs.rend(); ++it)
        stack.push_back(Frame{resolvent(f.items, *pick, *it), f.wfo});
    }
    return unknown ? NegResult::unknown : NegResult::failed;
  }

  const Program& p_;
  const LocalConfig& cfg_;
  VarFactory& vf_;
  std::size_t* budget_ = nullptr;
  std::map<Term, NegResult> neg_cache_;
};

}  // namespace

std::optional<Selection> select_literal(const std::vector<GoalItem>& goal, const BranchState& st,
                                        const LocalConfig& cfg, const Program& p, VarFactory& vf) {
  if (goal.empty()) return std::nullopt;
  Session s(p, cfg, vf);
  auto c = s.select(goal, st);
  if (!c) return std::nullopt;
  return Selection{c->pos, c->next};
}

SldTree unfold(const Program& p, const Conjunction& root, const LocalConfig& cfg, VarFactory& vf) {
  Session s(p, cfg, vf);
  return s.unfold(root);
}

std::vector<std::size_t> branch_leaves(const SldTree& t) {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t id = stack.back();
    stack.pop_back();
    const SldNode& n = t.nodes[id];
    if (n.status == NodeStatus::success || n.status == NodeStatus::incomplete) out.push_back(id);
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(it->child);
  }
  return out;
}

std::vector<Resultant> resultants(const SldTree& t) {
  std::vector<Resultant> out;
  for (std::size_t id : branch_leaves(t)) out.push_back(Resultant{t.nodes[id].head, t.nodes[id].goal});
  return out;
}

std::vector<Conjunction> leaves(const SldTree& t) {
  std::vector<Conjunction> out;
  for (std::size_t id : branch_leaves(t))
    if (t.nodes[id].status == NodeStatus::incomplete) out.push_back(t.nodes[id].goal);
  return out;
}

std::vector<std::pair<std::size_t, StepTag>> path_steps(const SldTree& t, std::size_t node) {
  std::vector<std::pair<std::size_t, StepTag>> out;
  while (t.nodes[node].parent) {
    std::size_t par = *t.nodes[node].parent;
    for (const auto& e : t.nodes[par].children)
      if (e.child == node) out.emplace_back(*t.nodes[par].selected, e.tag);
    node = par;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace pd
