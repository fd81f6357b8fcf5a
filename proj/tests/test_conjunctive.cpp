#include "doctest.h"
#include "pd/conjunctive.hpp"
#include "support.hpp"

using namespace pd;
using pdtest::G;

TEST_CASE("split: the growing middle window") {
  Conjunction c = G("p(X), q(f(X),s(0)), r(f(X)), s(X)");
  SplitPlan plan = split_conjunction(c, G("q(Z,0), r(Z)"));
  REQUIRE(plan.parts.size() == 3);
  CHECK(plan.full_match);
  CHECK(plan.matched_index == 1);
  CHECK(plan.parts[0] == G("p(X)"));
  CHECK(plan.parts[1] == G("q(f(X),s(0)), r(f(X))"));
  CHECK(plan.parts[2] == G("s(X)"));
}

TEST_CASE("split: a variant is one matched part") {
  SplitPlan plan = split_conjunction(G("p(X), q(X)"), G("p(Y), q(Y)"));
  REQUIRE(plan.parts.size() == 1);
  CHECK(plan.full_match);
  CHECK(plan.matched_index == 0);
}

TEST_CASE("split: no predicate match falls back to atoms") {
  SplitPlan plan = split_conjunction(G("a(X), b(X)"), G("c(Y)"));
  CHECK(plan.parts.size() == 2);
  CHECK_FALSE(plan.full_match);
}

TEST_CASE("split: ties go to the leftmost window") {
  SplitPlan plan = split_conjunction(G("p(a), p(b), p(c)"), G("p(X)"));
  CHECK(plan.matched_index == 0);
  CHECK(plan.parts.size() == 2);
}

TEST_CASE("best match msg keeps sharing") {
  VarFactory vf;
  CHECK(is_variant(best_match_msg(G("q(f(X),s(0)), r(f(X))"), G("q(Z,0), r(Z)"), vf), G("q(A,B), r(A)")));
  CHECK(is_variant(best_match_msg(G("p(X), q(X)"), G("p(X), q(X)"), vf), G("p(Y), q(Y)")));
  CHECK(is_variant(best_match_msg(G("p(a), p(b)"), G("p(c), p(d)"), vf), G("p(A), p(B)")));
}

TEST_CASE("leaf parts: cut at variable-independent points") {
  Program p = pdtest::program(":- open(o/1).\na(X).\nb(X).\nc(X).\n");
  auto parts = conjunctive_parts(G("a(X), b(X), c(Y), o(Y), \\+ a(Z)"), p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == G("a(X), b(X)"));
  CHECK(parts[1] == G("c(Y)"));
  CHECK(parts[2] == G("a(Z)"));

  auto atoms = atomic_parts(G("a(X), X = Y, \\+ b(Y), o(X)"), p);
  REQUIRE(atoms.size() == 2);
  CHECK(atoms[1] == G("b(Y)"));
}

TEST_CASE("leaf parts: long runs are broken into atoms") {
  Program p = pdtest::program("a(X, Y).\n");
  Conjunction chain = G("a(X1,X2), a(X2,X3), a(X3,X4)");
  CHECK(conjunctive_parts(chain, p, 8).size() == 1);
  CHECK(conjunctive_parts(chain, p, 2).size() == 3);
}
