#include "pd/global.hpp"

#include <algorithm>

#include "pd/conjunctive.hpp"
#include "pd/generalize.hpp"
#include "pd/orders.hpp"
#include "pd/syntax.hpp"

namespace pd {

const char* to_string(Mark m) {
  switch (m) {
    case Mark::unmarked: return "unmarked";
    case Mark::processed: return "processed";
    case Mark::covered: return "covered";
  }
  return "?";
}

namespace {

std::vector<Sig> shape(const Conjunction& c) {
  std::vector<Sig> out;
  for (const auto& l : c) out.push_back(l.sig());
  return out;
}

std::string text(const Conjunction& c) {
  VarNamer n;
  return to_string(c, n);
}

}  // namespace

GlobalSession::GlobalSession(const Program& p, const GlobalConfig& cfg) : p_(p), cfg_(cfg) {}

std::size_t GlobalSession::add_node(Conjunction label, std::optional<std::size_t> parent) {
  GNode n;
  n.id = t_.nodes.size();
  n.label = std::move(label);
  n.parent = parent;
  t_.nodes.push_back(std::move(n));
  if (parent) t_.nodes[*parent].children.push_back(t_.nodes.back().id);
  queue_.push_back(t_.nodes.back().id);
  check_budget();
  return t_.nodes.back().id;
}

void GlobalSession::check_budget() {
  if (t_.nodes.size() > cfg_.max_nodes)
    throw BudgetExceeded("global tree exceeds " + std::to_string(cfg_.max_nodes) + " nodes", t_);
  if (t_.steps > cfg_.max_steps)
    throw BudgetExceeded("unfolding exceeds " + std::to_string(cfg_.max_steps) + " resolution steps", t_);
}

const SldTree& GlobalSession::unfolding(std::size_t n) {
  GNode& node = t_.nodes[n];
  if (!node.tree) {
    node.tree = unfold(p_, node.label, cfg_.local, vf_);
    t_.steps += node.tree->steps;
    check_budget();
  }
  return *t_.nodes[n].tree;
}

const CharTree& GlobalSession::chtree(std::size_t n) {
  if (!t_.nodes[n].chtree) t_.nodes[n].chtree = characteristic_tree(unfolding(n));
  return *t_.nodes[n].chtree;
}

std::vector<std::size_t> GlobalSession::ancestors(std::size_t n) const {
  std::vector<std::size_t> out;
  for (auto a = t_.nodes[n].parent; a; a = t_.nodes[*a].parent) out.push_back(*a);
  return out;
}

std::optional<std::size_t> GlobalSession::covered(std::size_t n) {
  const Conjunction& label = t_.nodes[n].label;
  for (const auto& m : t_.nodes) {
    if (m.id == n || m.removed || m.mark != Mark::processed) continue;
    bool ok = false;
    switch (cfg_.covered_mode) {
      case CoveredMode::variant: ok = is_variant(label, m.label); break;
      case CoveredMode::instance: ok = is_instance_of(label, m.label); break;
      case CoveredMode::instance_plus_chtree:
        ok = is_instance_of(label, m.label) && chtree(n) == chtree(m.id);
        break;
    }
    if (ok) return m.id;
  }
  return std::nullopt;
}

std::optional<std::size_t> GlobalSession::whistle(std::size_t n) {
  const Conjunction& label = t_.nodes[n].label;
  auto anc = ancestors(n);
  auto same_shape = [&](std::size_t a) { return shape(t_.nodes[a].label) == shape(label); };
  switch (cfg_.whistle_mode) {
    case WhistleMode::embedding:
    case WhistleMode::embedding_plus_chtree: {
      FunctorClass fc{&p_.static_functors};
      for (std::size_t a : anc) {
        const Conjunction& w = t_.nodes[a].label;
        if (!embedded(w, label, fc)) continue;
        if (instance_check(label, w) == InstanceRel::strict_generalization) continue;
        if (cfg_.whistle_mode == WhistleMode::embedding_plus_chtree && !chtree_embedded(chtree(a), chtree(n)))
          continue;
        return a;
      }
      return std::nullopt;
    }
    case WhistleMode::termsize_wfo: {
      std::vector<std::size_t> chain;
      for (std::size_t a : anc)
        if (same_shape(a)) chain.push_back(a);
      if (chain.empty()) return std::nullopt;
      if (label.size() == 1) {
        std::vector<Literal> seq;
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) seq.push_back(t_.nodes[*it].label[0]);
        seq.push_back(label[0]);
        if (refine_wfo(seq, WfoConfig{})) return std::nullopt;
        return chain.front();
      }
      std::size_t prev = termsize(label);
      for (std::size_t a : chain) {
        std::size_t w = termsize(t_.nodes[a].label);
        if (w <= prev) return chain.front();
        prev = w;
      }
      return std::nullopt;
    }
    case WhistleMode::none_with_depth: {
      std::size_t need = static_cast<std::size_t>(std::max(cfg_.whistle_depth - 1, 1));
      std::vector<std::size_t> chain;
      for (std::size_t a : anc)
        if (same_shape(a)) chain.push_back(a);
      if (chain.size() >= need) return chain.front();
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Conjunction GlobalSession::generalize_node(std::size_t n, std::size_t w) {
  const Conjunction& a = t_.nodes[n].label;
  const Conjunction& b = t_.nodes[w].label;
  if (auto g = msg(a, b, vf_)) return g->generalization;
  // Labels of different shape only meet in conjunctive mode.
  SplitPlan plan = split_conjunction(a, b);
  const Conjunction& part = plan.parts[plan.matched_index];
  if (plan.full_match) return best_match_msg(part, b, vf_);
  return part;
}

void GlobalSession::relabel(std::size_t n, Conjunction label) {
  GNode& node = t_.nodes[n];
  node.label = std::move(label);
  node.tree.reset();
  node.chtree.reset();
}

void GlobalSession::remove_subtree(std::size_t w) {
  std::vector<std::size_t> stack(t_.nodes[w].children.begin(), t_.nodes[w].children.end());
  std::vector<bool> gone(t_.nodes.size(), false);
  while (!stack.empty()) {
    std::size_t d = stack.back();
    stack.pop_back();
    gone[d] = true;
    t_.nodes[d].removed = true;
    for (std::size_t c : t_.nodes[d].children) stack.push_back(c);
  }
  t_.nodes[w].children.clear();
  t_.events.push_back(TraceEvent{"remove", w, std::nullopt, "descendants dropped"});
  for (auto& m : t_.nodes) {
    if (m.removed || m.mark != Mark::covered || !m.covered_by || !gone[*m.covered_by]) continue;
    m.mark = Mark::unmarked;
    m.covered_by.reset();
    queue_.push_back(m.id);
  }
}

void GlobalSession::expand(std::size_t n) {
  const SldTree& tree = unfolding(n);
  t_.nodes[n].mark = Mark::processed;
  t_.events.push_back(TraceEvent{"process", n, std::nullopt, text(t_.nodes[n].label)});
  std::vector<Conjunction> parts;
  for (const auto& leaf : leaves(tree)) {
    auto ps = cfg_.conjunctive ? conjunctive_parts(leaf, p_, cfg_.max_label_length) : atomic_parts(leaf, p_);
    for (auto& x : ps) parts.push_back(std::move(x));
  }
  for (auto& part : parts) add_node(std::move(part), n);
}

void GlobalSession::step(std::size_t n) {
  for (;;) {
    if (auto m = covered(n)) {
      t_.nodes[n].mark = Mark::covered;
      t_.nodes[n].covered_by = m;
      t_.events.push_back(TraceEvent{"covered", n, m, text(t_.nodes[n].label)});
      return;
    }
    auto w = whistle(n);
    if (!w) {
      expand(n);
      return;
    }
    t_.events.push_back(TraceEvent{"whistle", n, w, text(t_.nodes[n].label)});
    const Conjunction label = t_.nodes[n].label;
    const Conjunction& wl = t_.nodes[*w].label;

    if (shape(label) != shape(wl)) {
      SplitPlan plan = split_conjunction(label, wl);
      if (plan.parts.size() > 1) {
        Conjunction kept = plan.full_match ? best_match_msg(plan.parts[plan.matched_index], wl, vf_)
                                           : plan.parts[plan.matched_index];
        for (std::size_t i = 0; i < plan.parts.size(); ++i)
          if (i != plan.matched_index) add_node(plan.parts[i], t_.nodes[n].parent);
        relabel(n, std::move(kept));
        t_.events.push_back(TraceEvent{"split", n, w, text(t_.nodes[n].label)});
        continue;
      }
    }

    Conjunction g = generalize_node(n, *w);
    if (cfg_.relabel_ancestor && instance_check(g, wl) == InstanceRel::strict_generalization) {
      remove_subtree(*w);
      relabel(*w, std::move(g));
      t_.nodes[*w].mark = Mark::unmarked;
      queue_.push_back(*w);
      t_.events.push_back(TraceEvent{"generalize", *w, n, text(t_.nodes[*w].label)});
      return;
    }
    if (instance_check(g, label) == InstanceRel::strict_generalization) {
      relabel(n, std::move(g));
      t_.events.push_back(TraceEvent{"generalize", n, w, text(t_.nodes[n].label)});
      continue;
    }
    // The generalization gains nothing. Any processed label the node is an
    // instance of covers it soundly; failing that, the node is specialized.
    for (const auto& m : t_.nodes) {
      if (m.id == n || m.removed || m.mark != Mark::processed || !is_instance_of(label, m.label)) continue;
      t_.nodes[n].mark = Mark::covered;
      t_.nodes[n].covered_by = m.id;
      t_.events.push_back(TraceEvent{"covered", n, m.id, text(label)});
      return;
    }
    expand(n);
    return;
  }
}

void GlobalSession::run() {
  while (head_ < queue_.size()) {
    std::size_t n = queue_[head_++];
    const GNode& node = t_.nodes[n];
    if (node.removed || node.mark != Mark::unmarked) continue;
    step(n);
  }
}

std::vector<ASetEntry> GlobalSession::a_set() {
  std::vector<std::size_t> order;
  for (const auto& e : t_.events)
    if (e.kind == "process") order.push_back(e.node);
  std::vector<ASetEntry> out;
  std::vector<bool> seen(t_.nodes.size(), false);
  for (std::size_t n : order) {
    const GNode& node = t_.nodes[n];
    if (seen[n] || node.removed || node.mark != Mark::processed) continue;
    seen[n] = true;
    bool dup = std::any_of(out.begin(), out.end(), [&](const ASetEntry& e) { return is_variant(e.label, node.label); });
    if (dup) continue;
    out.push_back(ASetEntry{node.label, chtree(n), unfolding(n)});
  }
  return out;
}

SpecResult specialize(const Program& p, const std::vector<Conjunction>& goals, const GlobalConfig& cfg) {
  Program prog = p;
  for (const auto& g : goals) prog.register_functors(g);
  prog.reindex();
  GlobalSession s(prog, cfg);
  for (const auto& g : goals) {
    auto parts = cfg.conjunctive ? conjunctive_parts(g, prog, cfg.max_label_length) : atomic_parts(g, prog);
    for (auto& part : parts) s.add_node(std::move(part), std::nullopt);
  }
  s.run();
  SpecResult r;
  r.a_set = s.a_set();
  std::vector<Conjunction> labels;
  std::vector<std::vector<Resultant>> res;
  for (const auto& e : r.a_set) {
    labels.push_back(e.label);
    res.push_back(resultants(e.tree));
  }
  r.residual = filter_and_rename(labels, res, cfg.filtering, prog);
  r.trace = s.tree();
  return r;
}

}  // namespace pd
