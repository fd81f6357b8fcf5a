#include "doctest.h"
#include "pd/syntax.hpp"
#include "support.hpp"

using namespace pd;
using pdtest::G;
using pdtest::T;

TEST_CASE("syntax: program with directive, negation and built-ins") {
  Program p = pdtest::program(
      ":- open(q/1).\n"
      "% comment\n"
      "p(X) :- q(X), \\+ r(X), X \\= a, Y = f(X), C =.. [g, Y], call(C).\n"
      "r('hello world').\n");
  CHECK(p.is_open(Sig{"q", 1}));
  REQUIRE(p.clauses.size() == 2);
  CHECK(p.clauses[0].id == 1);
  CHECK(p.clauses[0].body.size() == 6);
  CHECK(p.clauses[0].body[1].negative);
  CHECK(p.clauses[1].head.arg(0).functor() == "hello world");
}

TEST_CASE("syntax: not/1 parses as negation") {
  Conjunction g = G("not(p(a)), q");
  REQUIRE(g.size() == 2);
  CHECK(g[0].negative);
  CHECK(g[0].atom == T("p(a)"));
}

TEST_CASE("syntax: anonymous variables are distinct") {
  Term t = T("p(_, _)");
  CHECK_FALSE(t.arg(0) == t.arg(1));
}

TEST_CASE("syntax: errors carry positions") {
  CHECK_THROWS_AS(parse_program("p(a :- q."), ParseError);
  CHECK_THROWS_AS(parse_program("p(a). p(a, b)."), ParseError);
  CHECK_THROWS_AS(parse_program("X = a :- true."), ParseError);
  CHECK_THROWS_AS(parse_goal("p, X"), ParseError);
  try {
    parse_program("p(a).\nq(b) :- .");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("syntax: printing re-parses to a variant") {
  const char* text =
      ":- open(q/1).\n"
      "p([H|T], 'A b', [1,2]) :- q(H), \\+ r(T, X), X \\= f(Y), Z =.. [g, a].\n"
      "r([], []).\n";
  Program p = pdtest::program(text);
  Program again = pdtest::program(pretty(p));
  CHECK(pretty(again) == pretty(p));
  CHECK(again.open_preds == p.open_preds);
  CHECK(pdtest::same_clauses(p.clauses, again.clauses));
}

TEST_CASE("syntax: renamed variables get distinct printed names") {
  VarFactory vf;
  Clause c{1, T("p(X, Y)"), G("q(X, Y)")};
  Clause r = rename_apart(c, vf);
  Clause mixed{1, Term::make("p", {c.head.arg(0), r.head.arg(0)}), {}};
  std::string s = pretty(mixed);
  Program back = pdtest::program(s);
  CHECK_FALSE(back.clauses[0].head.arg(0) == back.clauses[0].head.arg(1));
}
