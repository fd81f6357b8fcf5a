#include "pd/terms.hpp"

#include <functional>
#include <stdexcept>

namespace pd {

struct Term::Node {
  bool is_var = false;
  Var v;
  std::string functor;
  std::vector<Term> args;
  std::size_t hash = 0;
  bool ground = true;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Term Term::variable(Var v) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->hash = mix(std::hash<std::string>{}(v.name), v.index);
  n->ground = false;
  n->v = std::move(v);
  return Term(std::move(n));
}

Term Term::make(std::string functor, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  std::size_t h = mix(std::hash<std::string>{}(functor), args.size());
  bool g = true;
  for (const auto& a : args) {
    h = mix(h, a.hash());
    g = g && a.is_ground();
  }
  n->functor = std::move(functor);
  n->args = std::move(args);
  n->hash = h;
  n->ground = g;
  return Term(std::move(n));
}

Term Term::nil() {
  static const Term t = make("[]");
  return t;
}

Term::Term() : n_(nil().n_) {}

Term Term::cons(Term head, Term tail) { return make(".", {std::move(head), std::move(tail)}); }

Term Term::list(const std::vector<Term>& items, std::optional<Term> tail) {
  Term acc = tail ? *tail : nil();
  for (auto it = items.rbegin(); it != items.rend(); ++it) acc = cons(*it, acc);
  return acc;
}

bool Term::is_var() const { return n_->is_var; }
bool Term::is_ground() const { return n_->ground; }
const Var& Term::var() const { return n_->v; }
const std::string& Term::functor() const { return n_->functor; }
std::size_t Term::arity() const { return n_->args.size(); }
const std::vector<Term>& Term::args() const { return n_->args; }
std::size_t Term::hash() const { return n_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.n_ == b.n_) return true;
  if (a.n_->hash != b.n_->hash || a.n_->is_var != b.n_->is_var) return false;
  if (a.n_->is_var) return a.n_->v == b.n_->v;
  if (a.n_->functor != b.n_->functor || a.n_->args.size() != b.n_->args.size()) return false;
  for (std::size_t i = 0; i < a.n_->args.size(); ++i)
    if (!(a.n_->args[i] == b.n_->args[i])) return false;
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.n_ == b.n_) return std::strong_ordering::equal;
  if (a.n_->is_var != b.n_->is_var)
    return a.n_->is_var ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.n_->is_var) return a.n_->v <=> b.n_->v;
  if (auto c = a.n_->args.size() <=> b.n_->args.size(); c != 0) return c;
  if (auto c = a.n_->functor <=> b.n_->functor; c != 0) return c;
  for (std::size_t i = 0; i < a.n_->args.size(); ++i)
    if (auto c = a.n_->args[i] <=> b.n_->args[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Program

void Program::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < clauses.size(); ++i) index_[clauses[i].head.sig()].push_back(i);
}

const std::vector<std::size_t>& Program::clauses_for(const Sig& pred) const {
  static const std::vector<std::size_t> none;
  auto it = index_.find(pred);
  return it == index_.end() ? none : it->second;
}

void Program::register_functors(const Term& t) {
  if (t.is_var()) return;
  static_functors.insert(t.sig());
  for (const auto& a : t.args()) register_functors(a);
}

void Program::register_functors(const Conjunction& c) {
  for (const auto& l : c) register_functors(l.atom);
}

// ----------------------------------------------------------- Substitution

const Term* Substitution::lookup(const Var& v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

void Substitution::bind(Var v, Term t) {
  if (t.is_var() && t.var() == v) {
    map_.erase(v);
    return;
  }
  map_.insert_or_assign(std::move(v), std::move(t));
}

Substitution Substitution::restrict_to(const std::vector<Var>& vs) const {
  Substitution out;
  for (const auto& v : vs)
    if (const Term* t = lookup(v)) out.bind(v, *t);
  return out;
}

Term apply(const Term& t, const Substitution& s) {
  if (s.empty() || t.is_ground()) return t;
  if (t.is_var()) {
    const Term* b = s.lookup(t.var());
    return b ? *b : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const auto& a : t.args()) {
    args.push_back(apply(a, s));
    changed = changed || !args.back().same_node(a);
  }
  return changed ? Term::make(t.functor(), std::move(args)) : t;
}

Literal apply(const Literal& l, const Substitution& s) { return Literal{l.negative, apply(l.atom, s)}; }

Conjunction apply(const Conjunction& c, const Substitution& s) {
  Conjunction out;
  out.reserve(c.size());
  for (const auto& l : c) out.push_back(apply(l, s));
  return out;
}

Clause apply(const Clause& c, const Substitution& s) {
  return Clause{c.id, apply(c.head, s), apply(c.body, s)};
}

Substitution compose(const Substitution& a, const Substitution& b) {
  Substitution out;
  for (const auto& [v, t] : a.bindings()) out.bind(v, apply(t, b));
  for (const auto& [v, t] : b.bindings())
    if (!a.lookup(v)) out.bind(v, t);
  return out;
}

// ------------------------------------------------------------ Unification

namespace {

class Unifier {
 public:
  explicit Unifier(UnifyOptions opt) : opt_(opt) {}

  bool unify(const Term& x, const Term& y) {
    std::vector<std::pair<Term, Term>> stack{{x, y}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      a = walk(a);
      b = walk(b);
      if (a.is_var()) {
        if (b.is_var() && b.var() == a.var()) continue;
        if (opt_.occurs_check && occurs(a.var(), b)) return false;
        bind_[a.var()] = b;
      } else if (b.is_var()) {
        if (opt_.occurs_check && occurs(b.var(), a)) return false;
        bind_[b.var()] = a;
      } else {
        if (a.same_node(b)) continue;
        if (a.arity() != b.arity() || a.functor() != b.functor()) return false;
        for (std::size_t i = 0; i < a.arity(); ++i) stack.emplace_back(a.arg(i), b.arg(i));
      }
    }
    return true;
  }

  // Converts the triangular bindings into an idempotent substitution. A
  // cyclic binding (possible without occurs check) has no finite solution.
  std::optional<Substitution> solved() {
    Substitution out;
    for (const auto& [v, t] : bind_) {
      std::set<Var> path{v};
      auto r = resolve(t, path);
      if (!r) return std::nullopt;
      out.bind(v, *r);
    }
    return out;
  }

 private:
  Term walk(Term t) const {
    while (t.is_var()) {
      auto it = bind_.find(t.var());
      if (it == bind_.end()) break;
      t = it->second;
    }
    return t;
  }

  bool occurs(const Var& v, const Term& t) const {
    Term w = walk(t);
    if (w.is_var()) return w.var() == v;
    for (const auto& a : w.args())
      if (occurs(v, a)) return true;
    return false;
  }

  std::optional<Term> resolve(const Term& t, std::set<Var>& path) {
    if (t.is_ground()) return t;
    if (t.is_var()) {
      auto it = bind_.find(t.var());
      if (it == bind_.end()) return t;
      if (auto m = memo_.find(t.var()); m != memo_.end()) return m->second;
      if (!path.insert(t.var()).second) return std::nullopt;
      auto r = resolve(it->second, path);
      path.erase(t.var());
      if (r) memo_.emplace(t.var(), *r);
      return r;
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    bool changed = false;
    for (const auto& a : t.args()) {
      auto r = resolve(a, path);
      if (!r) return std::nullopt;
      changed = changed || !r->same_node(a);
      args.push_back(std::move(*r));
    }
    return changed ? Term::make(t.functor(), std::move(args)) : t;
  }

  UnifyOptions opt_;
  std::map<Var, Term> bind_;
  std::map<Var, Term> memo_;
};

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b, UnifyOptions opt) {
  Unifier u(opt);
  if (!u.unify(a, b)) return std::nullopt;
  return u.solved();
}

std::optional<Substitution> unify(const Literal& a, const Literal& b, UnifyOptions opt) {
  if (a.negative != b.negative) return std::nullopt;
  return unify(a.atom, b.atom, opt);
}

std::optional<Substitution> unify(const Conjunction& a, const Conjunction& b, UnifyOptions opt) {
  if (a.size() != b.size()) return std::nullopt;
  Unifier u(opt);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].negative != b[i].negative) return std::nullopt;
    if (!u.unify(a[i].atom, b[i].atom)) return std::nullopt;
  }
  return u.solved();
}

namespace {

bool match_into(const Term& p, const Term& t, std::map<Var, Term>& m) {
  if (p.is_var()) {
    auto [it, fresh] = m.emplace(p.var(), t);
    return fresh || it->second == t;
  }
  if (t.is_var() || p.arity() != t.arity() || p.functor() != t.functor()) return false;
  if (p.is_ground()) return p == t;
  for (std::size_t i = 0; i < p.arity(); ++i)
    if (!match_into(p.arg(i), t.arg(i), m)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> match(const Term& pattern, const Term& target) {
  std::map<Var, Term> m;
  if (!match_into(pattern, target, m)) return std::nullopt;
  Substitution s;
  for (auto& [v, t] : m) s.bind(v, t);
  return s;
}

// --------------------------------------------------------------- Renaming

void collect_vars(const Term& t, std::vector<Var>& out) {
  if (t.is_ground()) return;
  if (t.is_var()) {
    for (const auto& v : out)
      if (v == t.var()) return;
    out.push_back(t.var());
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out);
}

std::vector<Var> vars_of(const Term& t) {
  std::vector<Var> out;
  collect_vars(t, out);
  return out;
}

std::vector<Var> vars_of(const Literal& l) { return vars_of(l.atom); }

std::vector<Var> vars_of(const Conjunction& c) {
  std::vector<Var> out;
  for (const auto& l : c) collect_vars(l.atom, out);
  return out;
}

bool is_ground(const Conjunction& c) {
  for (const auto& l : c)
    if (!l.atom.is_ground()) return false;
  return true;
}

namespace {

Substitution fresh_renaming(const std::vector<Var>& vs, VarFactory& vf, const std::set<Var>& reserved) {
  Substitution s;
  for (const auto& v : vs) {
    Var f = vf.fresh(v.name);
    while (reserved.count(f)) f = vf.fresh(v.name);
    s.bind(v, Term::variable(f));
  }
  return s;
}

}  // namespace

Clause rename_apart(const Clause& c, VarFactory& vf, const std::set<Var>& reserved) {
  std::vector<Var> vs;
  collect_vars(c.head, vs);
  for (const auto& l : c.body) collect_vars(l.atom, vs);
  if (vs.empty()) return c;
  return apply(c, fresh_renaming(vs, vf, reserved));
}

Conjunction rename_apart(const Conjunction& c, VarFactory& vf) {
  return pd::apply(c, fresh_renaming(vars_of(c), vf, {}));
}

Term rename_fresh(const Term& t, VarFactory& vf, Substitution* used) {
  auto s = fresh_renaming(vars_of(t), vf, {});
  if (used) *used = s;
  return apply(t, s);
}

// -------------------------------------------------------- Instance checks

const char* to_string(InstanceRel r) {
  switch (r) {
    case InstanceRel::variant: return "variant";
    case InstanceRel::strict_instance: return "strict_instance";
    case InstanceRel::strict_generalization: return "strict_generalization";
    case InstanceRel::incomparable: return "incomparable";
  }
  return "?";
}

InstanceRel instance_check(const Term& a, const Term& b) {
  bool a_inst = match(b, a).has_value();
  bool b_inst = match(a, b).has_value();
  if (a_inst && b_inst) return InstanceRel::variant;
  if (a_inst) return InstanceRel::strict_instance;
  if (b_inst) return InstanceRel::strict_generalization;
  return InstanceRel::incomparable;
}

InstanceRel instance_check(const Literal& a, const Literal& b) {
  return instance_check(literal_term(a), literal_term(b));
}

InstanceRel instance_check(const Conjunction& a, const Conjunction& b) {
  if (a.size() != b.size()) return InstanceRel::incomparable;
  return instance_check(tuple_term(a), tuple_term(b));
}

bool is_instance_of(const Conjunction& a, const Conjunction& b) {
  return a.size() == b.size() && match(tuple_term(b), tuple_term(a)).has_value();
}

bool is_variant(const Conjunction& a, const Conjunction& b) {
  return instance_check(a, b) == InstanceRel::variant;
}

// --------------------------------------------------------------- Termsize

std::size_t termsize(const Term& t) {
  if (t.is_var()) return 0;
  std::size_t n = 1;
  for (const auto& a : t.args()) n += termsize(a);
  return n;
}

std::size_t termsize(const Literal& l) {
  std::size_t n = 0;
  for (const auto& a : l.atom.args()) n += termsize(a);
  return n;
}

std::size_t termsize(const Conjunction& c) {
  std::size_t n = 0;
  for (const auto& l : c) n += termsize(l);
  return n;
}

// --------------------------------------------------------------- Encoding

Term literal_term(const Literal& l) {
  return l.negative ? Term::make(kNotFunctor, {l.atom}) : l.atom;
}

Term tuple_term(const Conjunction& c) {
  std::vector<Term> args;
  args.reserve(c.size());
  for (const auto& l : c) args.push_back(literal_term(l));
  return Term::make(kTupleFunctor, std::move(args));
}

Literal term_literal(const Term& t) {
  if (!t.is_var() && t.arity() == 1 && t.functor() == kNotFunctor) return neg(t.arg(0));
  return pos(t);
}

Conjunction tuple_conjunction(const Term& t) {
  if (t.is_var() || t.functor() != kTupleFunctor)
    throw std::invalid_argument("not a conjunction tuple");
  Conjunction c;
  for (const auto& a : t.args()) c.push_back(term_literal(a));
  return c;
}

}  // namespace pd
