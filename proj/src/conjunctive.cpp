#include "pd/conjunctive.hpp"

#include <set>
#include <stdexcept>

#include "pd/generalize.hpp"
#include "pd/syntax.hpp"

namespace pd {

namespace {

bool aligned(const Literal& a, const Literal& b) { return a.negative == b.negative && a.sig() == b.sig(); }

bool user_literal(const Literal& l, const Program& p) {
  return !is_builtin(l.sig()) && !p.is_open(l.sig());
}

}  // namespace

SplitPlan split_conjunction(const Conjunction& c, const Conjunction& ancestor) {
  SplitPlan plan;
  std::size_t n = ancestor.size();
  std::size_t best = 0, best_score = 0;
  bool any = false;
  if (n > 0 && n <= c.size()) {
    for (std::size_t i = 0; i + n <= c.size(); ++i) {
      std::size_t score = 0;
      for (std::size_t j = 0; j < n; ++j) score += aligned(c[i + j], ancestor[j]);
      if (!any || score > best_score) {
        best = i;
        best_score = score;
        any = true;
      }
    }
  }
  if (any && best_score == n) {
    if (best > 0) plan.parts.emplace_back(c.begin(), c.begin() + best);
    plan.matched_index = plan.parts.size();
    plan.parts.emplace_back(c.begin() + best, c.begin() + best + n);
    if (best + n < c.size()) plan.parts.emplace_back(c.begin() + best + n, c.end());
    plan.full_match = true;
    return plan;
  }
  for (const auto& l : c) plan.parts.push_back({l});
  plan.matched_index = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (const auto& a : ancestor)
      if (aligned(c[i], a)) {
        plan.matched_index = i;
        return plan;
      }
  return plan;
}

Conjunction best_match_msg(const Conjunction& window, const Conjunction& ancestor, VarFactory& vf) {
  auto r = msg(window, ancestor, vf);
  if (!r) throw std::logic_error("best_match_msg: window does not line up with the ancestor");
  return r->generalization;
}

std::vector<Conjunction> atomic_parts(const Conjunction& leaf, const Program& p) {
  std::vector<Conjunction> out;
  for (const auto& l : leaf)
    if (user_literal(l, p)) out.push_back({pos(l.atom)});
  return out;
}

std::vector<Conjunction> conjunctive_parts(const Conjunction& leaf, const Program& p, std::size_t max_len) {
  std::vector<Conjunction> out;
  auto flush = [&](Conjunction& run) {
    if (run.empty()) return;
    bool has_positive = false;
    for (const auto& l : run) has_positive |= !l.negative;
    if (run.size() > max_len || !has_positive) {
      for (auto& a : atomic_parts(run, p)) out.push_back(std::move(a));
    } else {
      out.push_back(run);
    }
    run.clear();
  };
  Conjunction run;
  for (std::size_t i = 0; i < leaf.size(); ++i) {
    if (!user_literal(leaf[i], p)) {
      flush(run);
      continue;
    }
    if (!run.empty()) {
      // Cut where the prefix so far and the rest of the leaf share nothing.
      std::set<Var> left, right;
      for (std::size_t j = 0; j < i; ++j)
        for (const auto& v : vars_of(leaf[j])) left.insert(v);
      for (std::size_t j = i; j < leaf.size(); ++j)
        for (const auto& v : vars_of(leaf[j])) right.insert(v);
      bool shared = false;
      for (const auto& v : right) shared |= left.count(v) != 0;
      if (!shared) flush(run);
    }
    run.push_back(leaf[i]);
  }
  flush(run);
  return out;
}

}  // namespace pd
