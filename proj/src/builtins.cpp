#include "pd/builtins.hpp"

#include "pd/syntax.hpp"

namespace pd {

namespace {

BuiltinStep success(Substitution s = {}) { return {BuiltinEval::success, std::move(s), std::nullopt}; }
BuiltinStep failure() { return {BuiltinEval::failure, {}, std::nullopt}; }
BuiltinStep residual() { return {BuiltinEval::residual, {}, std::nullopt}; }

BuiltinStep from_unify(const Term& a, const Term& b, UnifyOptions opt) {
  auto s = unify(a, b, opt);
  return s ? success(std::move(*s)) : failure();
}

// Collects the items of a proper list; nullopt for partial lists.
std::optional<std::vector<Term>> proper_list(Term t) {
  std::vector<Term> out;
  while (t.is_cons()) {
    out.push_back(t.arg(0));
    t = t.arg(1);
  }
  if (!t.is_nil()) return std::nullopt;
  return out;
}

BuiltinStep univ(const Term& t, const Term& l, bool runtime, UnifyOptions opt) {
  if (!t.is_var()) {
    std::vector<Term> items{Term::make(t.functor())};
    for (const auto& a : t.args()) items.push_back(a);
    return from_unify(Term::list(items), l, opt);
  }
  auto items = proper_list(l);
  if (items && !items->empty() && !items->front().is_var()) {
    const Term& f = items->front();
    if (items->size() == 1) return from_unify(t, f, opt);
    if (!f.is_constant()) return failure();
    std::vector<Term> args(items->begin() + 1, items->end());
    return from_unify(t, Term::make(f.functor(), std::move(args)), opt);
  }
  if (runtime) throw InstantiationError("=.. needs a bound term or a proper list with a bound head");
  return residual();
}

}  // namespace

BuiltinStep eval_builtin(const Term& atom, bool runtime, UnifyOptions opt) {
  const std::string& f = atom.functor();
  if (f == "true") return success();
  if (f == "fail") return failure();
  if (f == "=") return from_unify(atom.arg(0), atom.arg(1), opt);
  if (f == "\\=") {
    bool unifiable = unify(atom.arg(0), atom.arg(1), opt).has_value();
    if (!unifiable) return success();
    if (runtime || (atom.arg(0).is_ground() && atom.arg(1).is_ground())) return failure();
    return residual();
  }
  if (f == "=..") return univ(atom.arg(0), atom.arg(1), runtime, opt);
  if (f == "call") {
    const Term& g = atom.arg(0);
    if (g.is_var()) {
      if (runtime) throw InstantiationError("call/1 of an unbound variable");
      return residual();
    }
    BuiltinStep s = success();
    if (g.arity() == 1 && (g.functor() == "\\+" || g.functor() == "not"))
      s.replacement = neg(g.arg(0));
    else
      s.replacement = pos(g);
    return s;
  }
  throw std::logic_error("not a built-in: " + to_string(atom));
}

}  // namespace pd
