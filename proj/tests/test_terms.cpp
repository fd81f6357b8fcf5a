#include "doctest.h"
#include "pd/syntax.hpp"
#include "pd/terms.hpp"
#include "support.hpp"

using namespace pd;
using pdtest::G;
using pdtest::L;
using pdtest::T;

TEST_CASE("terms: construction and queries") {
  Term t = T("f(a, X, [b|Y])");
  CHECK(t.functor() == "f");
  CHECK(t.arity() == 3);
  CHECK_FALSE(t.is_ground());
  CHECK(t.arg(0).is_constant());
  CHECK(t.arg(1).is_var());
  CHECK(t.arg(2).is_cons());
  CHECK(Term().is_nil());
  CHECK(T("[a,b]") == Term::list({T("a"), T("b")}));
  CHECK(T("g(a)").is_ground());
}

TEST_CASE("terms: unification") {
  auto s = unify(T("p(X, f(Y))"), T("p(a, f(b))"));
  REQUIRE(s);
  CHECK(apply(T("q(X, Y)"), *s) == T("q(a, b)"));
  CHECK_FALSE(unify(T("p(a)"), T("p(b)")));
  CHECK_FALSE(unify(T("p(X, X)"), T("p(a, b)")));

  auto chain = unify(T("p(X, Y, Z)"), T("p(Y, Z, a)"));
  REQUIRE(chain);
  CHECK(apply(T("t(X, Y, Z)"), *chain) == T("t(a, a, a)"));
}

TEST_CASE("terms: cyclic bindings fail with or without the occurs check") {
  CHECK_FALSE(unify(T("X"), T("f(X)"), UnifyOptions{true}));
  CHECK_FALSE(unify(T("X"), T("f(X)"), UnifyOptions{false}));
  CHECK_FALSE(unify(T("p(X, Y)"), T("p(f(Y), f(X))")));
}

TEST_CASE("terms: matching is one-way") {
  CHECK(match(T("p(X, b)"), T("p(a, b)")));
  CHECK_FALSE(match(T("p(a, b)"), T("p(X, b)")));
  CHECK_FALSE(match(T("p(X, X)"), T("p(a, b)")));
  auto m = match(T("p(X, Y)"), T("p(Y, X)"));
  REQUIRE(m);
  CHECK(apply(T("p(X, Y)"), *m) == T("p(Y, X)"));
}

TEST_CASE("terms: instance relation") {
  CHECK(instance_check(T("p(a)"), T("p(X)")) == InstanceRel::strict_instance);
  CHECK(instance_check(T("p(X)"), T("p(a)")) == InstanceRel::strict_generalization);
  CHECK(instance_check(T("p(X, Y)"), T("p(Y, Z)")) == InstanceRel::variant);
  CHECK(instance_check(T("p(a, X)"), T("p(X, b)")) == InstanceRel::incomparable);
  CHECK(is_variant(G("p(X), q(X)"), G("p(Y), q(Y)")));
  CHECK_FALSE(is_variant(G("p(X), q(X)"), G("p(X), q(Y)")));
  CHECK(is_instance_of(G("p(X), q(X)"), G("p(X), q(Y)")));
}

TEST_CASE("terms: termsize counts symbols, literals skip the predicate") {
  CHECK(termsize(T("X")) == 0);
  CHECK(termsize(T("[]")) == 1);
  CHECK(termsize(T("[a]")) == 3);
  CHECK(termsize(L("rev([a,b],[],R)")) == 6);
  CHECK(termsize(L("member(X,[a,b|T])")) == 4);
  CHECK(termsize(L("rev([a,b|T],[],R)")) == 5);
  CHECK(termsize(L("rev([b|T],[a],R)")) == 5);
}

TEST_CASE("terms: renaming apart gives fresh variables") {
  VarFactory vf;
  Clause c{1, T("p(X, Y)"), G("q(X), r(Y, Z)")};
  Clause r = rename_apart(c, vf);
  for (const auto& v : vars_of(Conjunction{pos(r.head)})) CHECK(v.index != 0);
  CHECK(is_variant(Conjunction{pos(c.head), c.body[0], c.body[1]}, Conjunction{pos(r.head), r.body[0], r.body[1]}));
}

TEST_CASE("terms: composition") {
  auto a = *unify(T("X"), T("f(Y)"));
  auto b = *unify(T("Y"), T("a"));
  Term e = T("g(X, Y, Z)");
  CHECK(apply(e, compose(a, b)) == apply(apply(e, a), b));
}

TEST_CASE("terms: variables in first-occurrence order") {
  auto vs = vars_of(G("p(Y, X), q(Z, Y)"));
  REQUIRE(vs.size() == 3);
  CHECK(vs[0].name == "Y");
  CHECK(vs[1].name == "X");
  CHECK(vs[2].name == "Z");
}

TEST_CASE("terms: literal and tuple encodings round-trip") {
  Conjunction c = G("p(X), \\+ q(X, a)");
  CHECK(tuple_conjunction(tuple_term(c)) == c);
  CHECK(term_literal(literal_term(c[1])) == c[1]);
}
