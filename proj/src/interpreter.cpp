#include "pd/interpreter.hpp"

#include "pd/builtins.hpp"
#include "pd/syntax.hpp"

namespace pd {

namespace {

struct Frame {
  std::vector<Literal> goal;  // reversed: back() is the leftmost literal
  Term answer;                // tuple of the query variables
  std::size_t next_clause = 0;
};

class Machine {
 public:
  Machine(const Program& p, std::size_t max_steps, UnifyOptions opt)
      : p_(p), max_steps_(max_steps), opt_(opt) {}

  std::size_t steps = 0;
  bool cut_short = false;

  // Explores ← goal and collects up to `limit` answers (0 = unlimited).
  std::vector<Term> solve(const Conjunction& goal, const Term& answer, std::size_t limit) {
    std::vector<Term> out;
    std::vector<Frame> stack;
    stack.push_back(Frame{std::vector<Literal>(goal.rbegin(), goal.rend()), answer, 0});
    while (!stack.empty()) {
      if (steps >= max_steps_) {
        cut_short = true;
        break;
      }
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (f.goal.empty()) {
        out.push_back(f.answer);
        if (limit && out.size() >= limit) break;
        continue;
      }
      Literal sel = f.goal.back();
      if (sel.negative) {
        if (!sel.atom.is_ground()) throw Floundering("negative literal is not ground: " + to_string(sel));
        ++steps;
        auto sub = solve({pos(sel.atom)}, Term::nil(), 1);
        if (cut_short) break;
        if (!sub.empty()) continue;
        f.goal.pop_back();
        stack.push_back(std::move(f));
        continue;
      }
      Sig s = sel.sig();
      if (is_builtin(s)) {
        BuiltinStep b = eval_builtin(sel.atom, true, opt_);
        if (b.result != BuiltinEval::success) continue;
        ++steps;
        f.goal.pop_back();
        if (b.replacement) f.goal.push_back(*b.replacement);
        stack.push_back(advance(f.goal, f.answer, b.mgu));
        continue;
      }
      if (p_.is_open(s) || !p_.defines(s)) continue;
      const auto& idx = p_.clauses_for(s);
      for (std::size_t k = f.next_clause; k < idx.size(); ++k) {
        Clause c = rename_apart(p_.clauses[idx[k]], vf_);
        auto mgu = unify(sel.atom, c.head, opt_);
        if (!mgu) continue;
        ++steps;
        if (k + 1 < idx.size()) stack.push_back(Frame{f.goal, f.answer, k + 1});
        std::vector<Literal> g(f.goal.begin(), f.goal.end() - 1);
        for (auto it = c.body.rbegin(); it != c.body.rend(); ++it) g.push_back(*it);
        stack.push_back(advance(g, f.answer, *mgu));
        break;
      }
    }
    return out;
  }

 private:
  static Frame advance(const std::vector<Literal>& goal, const Term& answer, const Substitution& s) {
    Frame f;
    f.goal.reserve(goal.size());
    for (const auto& l : goal) f.goal.push_back(pd::apply(l, s));
    f.answer = pd::apply(answer, s);
    return f;
  }

  const Program& p_;
  std::size_t max_steps_;
  UnifyOptions opt_;
  VarFactory vf_{1};
};

}  // namespace

RunResult run_query(const Program& p, const Conjunction& goal, std::size_t max_steps, UnifyOptions opt) {
  auto qv = vars_of(goal);
  std::vector<Term> qt;
  for (const auto& v : qv) qt.push_back(Term::variable(v));
  Machine m(p, max_steps, opt);
  RunResult r;
  for (const Term& a : m.solve(goal, Term::make("ans", qt), 0)) {
    Substitution s;
    for (std::size_t i = 0; i < qv.size(); ++i) s.bind(qv[i], a.arg(i));
    r.answers.push_back(std::move(s));
  }
  r.resolution_steps = m.steps;
  r.exhausted = !m.cut_short;
  return r;
}

}  // namespace pd
