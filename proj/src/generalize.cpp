#include "pd/generalize.hpp"

namespace pd {

namespace {

class AntiUnifier {
 public:
  explicit AntiUnifier(VarFactory& vf) : vf_(vf) {}

  Term gen(const Term& a, const Term& b) {
    if (a == b) return a;
    if (!a.is_var() && !b.is_var() && a.functor() == b.functor() && a.arity() == b.arity()) {
      std::vector<Term> args;
      args.reserve(a.arity());
      for (std::size_t i = 0; i < a.arity(); ++i) args.push_back(gen(a.arg(i), b.arg(i)));
      return Term::make(a.functor(), std::move(args));
    }
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return Term::variable(it->second);
    Var v = vf_.fresh("G");
    memo_.emplace(std::move(key), v);
    theta1.bind(v, a);
    theta2.bind(v, b);
    return Term::variable(v);
  }

  Substitution theta1;
  Substitution theta2;

 private:
  VarFactory& vf_;
  std::map<std::pair<Term, Term>, Var> memo_;
};

}  // namespace

MsgResult<Term> msg(const Term& a, const Term& b, VarFactory& vf) {
  AntiUnifier au(vf);
  Term g = au.gen(a, b);
  return {g, au.theta1, au.theta2};
}

std::optional<MsgResult<Literal>> msg(const Literal& a, const Literal& b, VarFactory& vf) {
  if (a.negative != b.negative || a.sig() != b.sig()) return std::nullopt;
  AntiUnifier au(vf);
  Term g = au.gen(a.atom, b.atom);
  return MsgResult<Literal>{Literal{a.negative, g}, au.theta1, au.theta2};
}

std::optional<MsgResult<Conjunction>> msg(const Conjunction& a, const Conjunction& b, VarFactory& vf) {
  if (a.size() != b.size()) return std::nullopt;
  AntiUnifier au(vf);
  Conjunction g;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].negative != b[i].negative || a[i].sig() != b[i].sig()) return std::nullopt;
    g.push_back(Literal{a[i].negative, au.gen(a[i].atom, b[i].atom)});
  }
  return MsgResult<Conjunction>{std::move(g), au.theta1, au.theta2};
}

}  // namespace pd
