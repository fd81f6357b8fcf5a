#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pd {

struct Var {
  std::string name;
  std::uint64_t index = 0;

  friend bool operator==(const Var&, const Var&) = default;
  friend auto operator<=>(const Var&, const Var&) = default;
};

// Functor or predicate signature.
struct Sig {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const Sig&, const Sig&) = default;
  friend auto operator<=>(const Sig&, const Sig&) = default;
  std::string str() const { return name + "/" + std::to_string(arity); }
};

using SigSet = std::set<Sig>;

// Immutable, structurally shared term. Constants are compounds with no args.
class Term {
 public:
  Term();  // the empty list
  static Term variable(Var v);
  static Term variable(std::string name, std::uint64_t index = 0) {
    return variable(Var{std::move(name), index});
  }
  static Term make(std::string functor, std::vector<Term> args = {});
  static Term nil();
  static Term cons(Term head, Term tail);
  static Term list(const std::vector<Term>& items, std::optional<Term> tail = std::nullopt);

  bool is_var() const;
  bool is_constant() const { return !is_var() && arity() == 0; }
  bool is_ground() const;
  bool is_nil() const { return !is_var() && arity() == 0 && functor() == "[]"; }
  bool is_cons() const { return !is_var() && arity() == 2 && functor() == "."; }

  const Var& var() const;
  const std::string& functor() const;
  std::size_t arity() const;
  const std::vector<Term>& args() const;
  const Term& arg(std::size_t i) const { return args()[i]; }
  Sig sig() const { return Sig{functor(), arity()}; }
  std::size_t hash() const;

  bool same_node(const Term& o) const { return n_ == o.n_; }
  const void* id() const { return n_.get(); }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct Literal {
  bool negative = false;
  Term atom;

  Sig sig() const { return atom.sig(); }
  const std::string& pred() const { return atom.functor(); }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (a.negative != b.negative) return a.negative <=> b.negative;
    return a.atom <=> b.atom;
  }
};

inline Literal pos(Term atom) { return Literal{false, std::move(atom)}; }
inline Literal neg(Term atom) { return Literal{true, std::move(atom)}; }

using Conjunction = std::vector<Literal>;

struct Clause {
  int id = 0;
  Term head;
  Conjunction body;
};

struct Program {
  std::vector<Clause> clauses;
  std::set<Sig> open_preds;
  SigSet static_functors;

  // Rebuilds the predicate index; call after editing `clauses`.
  void reindex();
  const std::vector<std::size_t>& clauses_for(const Sig& pred) const;
  bool defines(const Sig& pred) const { return index_.count(pred) != 0; }
  bool is_open(const Sig& pred) const { return open_preds.count(pred) != 0; }
  void register_functors(const Term& t);
  void register_functors(const Conjunction& c);

 private:
  std::map<Sig, std::vector<std::size_t>> index_;
};

class Substitution {
 public:
  Substitution() = default;

  const Term* lookup(const Var& v) const;
  void bind(Var v, Term t);
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<Var, Term>& bindings() const { return map_; }
  // Keeps only the bindings of the given variables.
  Substitution restrict_to(const std::vector<Var>& vs) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<Var, Term> map_;
};

Term apply(const Term& t, const Substitution& s);
Literal apply(const Literal& l, const Substitution& s);
Conjunction apply(const Conjunction& c, const Substitution& s);
Clause apply(const Clause& c, const Substitution& s);

// apply(e, compose(a, b)) == apply(apply(e, a), b)
Substitution compose(const Substitution& a, const Substitution& b);

struct UnifyOptions {
  bool occurs_check = false;
};

std::optional<Substitution> unify(const Term& a, const Term& b, UnifyOptions opt = {});
std::optional<Substitution> unify(const Literal& a, const Literal& b, UnifyOptions opt = {});
std::optional<Substitution> unify(const Conjunction& a, const Conjunction& b,
                                  UnifyOptions opt = {});

// One-way matching: finds s with apply(pattern, s) == target.
std::optional<Substitution> match(const Term& pattern, const Term& target);

// Supplies fresh variable indices; indices never repeat within one instance.
class VarFactory {
 public:
  explicit VarFactory(std::uint64_t start = 1) : next_(start) {}
  Var fresh(const std::string& name) { return Var{name, next_++}; }
  std::uint64_t peek() const { return next_; }

 private:
  std::uint64_t next_;
};

Clause rename_apart(const Clause& c, VarFactory& vf, const std::set<Var>& reserved = {});
Conjunction rename_apart(const Conjunction& c, VarFactory& vf);
// Renames every variable to a fresh one; returns the renaming used.
Term rename_fresh(const Term& t, VarFactory& vf, Substitution* used = nullptr);

void collect_vars(const Term& t, std::vector<Var>& out);
std::vector<Var> vars_of(const Term& t);
std::vector<Var> vars_of(const Literal& l);
std::vector<Var> vars_of(const Conjunction& c);
bool is_ground(const Conjunction& c);

enum class InstanceRel { variant, strict_instance, strict_generalization, incomparable };
const char* to_string(InstanceRel r);

InstanceRel instance_check(const Term& a, const Term& b);
InstanceRel instance_check(const Literal& a, const Literal& b);
InstanceRel instance_check(const Conjunction& a, const Conjunction& b);

bool is_instance_of(const Conjunction& a, const Conjunction& b);
bool is_variant(const Conjunction& a, const Conjunction& b);

// Counts function and constant symbols. For a literal only the arguments are
// counted, so the predicate symbol contributes nothing.
std::size_t termsize(const Term& t);
std::size_t termsize(const Literal& l);
std::size_t termsize(const Conjunction& c);

// Encodes a literal / conjunction as a single term (used for generic
// matching): negative literals wrap their atom, conjunctions become a tuple.
Term literal_term(const Literal& l);
Term tuple_term(const Conjunction& c);
Literal term_literal(const Term& t);
Conjunction tuple_conjunction(const Term& t);

inline constexpr const char* kNotFunctor = "$not";
inline constexpr const char* kTupleFunctor = "$tuple";

}  // namespace pd
