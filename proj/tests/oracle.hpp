#pragma once

// A plain recursive SLDNF solver used as a reference for the iterative
// interpreter: same counting rules, independent control.

#include <functional>
#include <stdexcept>

#include "pd/builtins.hpp"
#include "pd/syntax.hpp"
#include "pd/terms.hpp"

namespace pdtest {

struct OracleResult {
  std::vector<pd::Term> answers;  // ans(V1, ..., Vn) over the goal variables
  std::size_t steps = 0;
  bool complete = true;
};

class Oracle {
 public:
  Oracle(const pd::Program& p, std::size_t max_steps) : p_(p), max_(max_steps) {}

  OracleResult run(const pd::Conjunction& goal) {
    std::vector<pd::Term> vs;
    for (const auto& v : pd::vars_of(goal)) vs.push_back(pd::Term::variable(v));
    OracleResult r;
    try {
      solve(goal, pd::Term::make("ans", vs), [&](const pd::Term& a) {
        r.answers.push_back(a);
        return true;
      });
    } catch (const OutOfSteps&) {
      r.complete = false;
    }
    r.steps = steps_;
    return r;
  }

 private:
  struct OutOfSteps {};

  void tick() {
    if (steps_ >= max_) throw OutOfSteps{};
    ++steps_;
  }

  // Returns false once `k` asks to stop.
  bool solve(const pd::Conjunction& goal, const pd::Term& ans, const std::function<bool(const pd::Term&)>& k) {
    if (goal.empty()) return k(ans);
    const pd::Literal& first = goal.front();
    pd::Conjunction rest(goal.begin() + 1, goal.end());
    if (first.negative) {
      if (!first.atom.is_ground()) throw std::runtime_error("flounder");
      tick();
      bool found = false;
      solve({pd::pos(first.atom)}, pd::Term::nil(), [&](const pd::Term&) {
        found = true;
        return false;
      });
      return found ? true : solve(rest, ans, k);
    }
    if (pd::is_builtin(first.sig())) {
      pd::BuiltinStep b = pd::eval_builtin(first.atom, true);
      if (b.result != pd::BuiltinEval::success) return true;
      tick();
      pd::Conjunction next;
      if (b.replacement) next.push_back(*b.replacement);
      next.insert(next.end(), rest.begin(), rest.end());
      return solve(pd::apply(next, b.mgu), pd::apply(ans, b.mgu), k);
    }
    if (p_.is_open(first.sig()) || !p_.defines(first.sig())) return true;
    for (std::size_t idx : p_.clauses_for(first.sig())) {
      pd::Clause c = pd::rename_apart(p_.clauses[idx], vf_);
      auto m = pd::unify(first.atom, c.head);
      if (!m) continue;
      tick();
      pd::Conjunction next = c.body;
      next.insert(next.end(), rest.begin(), rest.end());
      if (!solve(pd::apply(next, *m), pd::apply(ans, *m), k)) return false;
    }
    return true;
  }

  const pd::Program& p_;
  std::size_t max_;
  std::size_t steps_ = 0;
  pd::VarFactory vf_{1000000};
};

}  // namespace pdtest
