#include "doctest.h"
#include "pd/codegen.hpp"
#include "pd/global.hpp"
#include "support.hpp"

using namespace pd;
using pdtest::G;
using pdtest::T;

namespace {

RenameMap member_map(const Program& p) {
  std::vector<Conjunction> labels{G("member(a,L)"), G("member(X,[b])")};
  return filter_and_rename(labels, {{}, {}}, true, p).map;
}

}  // namespace

TEST_CASE("rename: filtered names and variables") {
  Program p = pdtest::corpus("inboth.pl");
  RenameMap m = member_map(p);
  REQUIRE(m.entries.size() == 2);
  CHECK(m.entries[0].name == "member__1");
  CHECK(m.entries[0].renamed.arity() == 1);
  CHECK(m.entries[1].name == "member__2");
}

TEST_CASE("fold: a closed query folds onto the renamed atoms") {
  Program p = pdtest::corpus("inboth.pl");
  RenameMap m = member_map(p);
  auto folded = fold_goal(G("member(a,[a,c]), member(b,[b])"), m, p);
  REQUIRE(folded);
  CHECK(*folded == G("member__1([a,c]), member__2(b)"));
  CHECK_FALSE(fold_goal(G("member(c,[c])"), m, p));
}

TEST_CASE("fold: the most specific label wins") {
  Program p = pdtest::corpus("append.pl");
  auto m = filter_and_rename({G("app(X,Y,Z)"), G("app([],Y,Z)")}, {{}, {}}, true, p).map;
  auto folded = fold_goal(G("app([],[a],R)"), m, p);
  REQUIRE(folded);
  CHECK((*folded)[0].pred() == "app__2");
}

TEST_CASE("fold: negative literals fold their atom and built-ins stay") {
  Program p = pdtest::corpus("inboth.pl");
  auto m = filter_and_rename({G("bad(X)")}, {{}}, true, p).map;
  auto folded = fold_goal(G("\\+ bad(a), X = a"), m, p);
  REQUIRE(folded);
  CHECK(*folded == G("\\+ bad__1(a), X = a"));
}

TEST_CASE("interface: one clause per atomic label") {
  Program p = pdtest::corpus("inboth.pl");
  RenameMap m = member_map(p);
  auto iface = build_interface(m);
  REQUIRE(iface.size() == 2);
  CHECK(iface[0].head == T("member(a,L)"));
  CHECK(iface[0].body == G("member__1(L)"));
  CHECK(build_interface(RenameMap{}).empty());
}

TEST_CASE("emit: golden inboth residual without filtering") {
  GlobalConfig cfg;
  cfg.filtering = false;
  SpecResult r = specialize(pdtest::corpus("inboth.pl"), {G("inboth(X,[a],L)")}, cfg);
  std::string text = emit_program(r.residual);
  Program back = pdtest::program(text);
  CHECK(pdtest::same_clauses(back.clauses, pdtest::program("inboth__1(a,[a],L) :- member__2(a,L).\n"
                                                           "member__2(a,[a|T]).\n"
                                                           "member__2(a,[Y|T]) :- member__2(a,T).\n"
                                                           "inboth(X,[a],L) :- inboth__1(X,[a],L).\n"
                                                           "member(a,L) :- member__2(a,L).\n")
                                               .clauses));
  RenameMap m = parse_rename_map(text);
  REQUIRE(m.entries.size() == 2);
  CHECK(m.entries[1].name == "member__2");
  CHECK(is_variant(m.entries[1].label, G("member(a,L)")));
}

TEST_CASE("emit: map with filtering drops the constant argument") {
  SpecResult r = specialize(pdtest::corpus("map.pl"), {G("map(inv,In,Out)")}, GlobalConfig{});
  Program back = pdtest::program(emit_program(r.residual));
  CHECK(pdtest::same_clauses(back.clauses, pdtest::program("map__1([],[]).\n"
                                                           "map__1([0|T],[1|PT]) :- map__1(T,PT).\n"
                                                           "map__1([1|T],[0|PT]) :- map__1(T,PT).\n"
                                                           "map(inv,In,Out) :- map__1(In,Out).\n")
                                               .clauses));
}

TEST_CASE("emit: open directives survive and an empty residual has only comments") {
  Program p = pdtest::corpus("open_q.pl");
  SpecResult r = specialize(p, {G("p(a)")}, GlobalConfig{});
  std::string text = emit_program(r.residual);
  CHECK(text.find(":- open(q/1).") != std::string::npos);
  Residual empty = filter_and_rename({}, {}, true, p);
  CHECK(emit_program(empty) == ":- open(q/1).\n");
}

TEST_CASE("rename: shared label variables appear once") {
  GlobalConfig cfg;
  cfg.conjunctive = true;
  SpecResult r = specialize(pdtest::corpus("double_append.pl"), {G("app(X,Y,I), app(I,Z,R)")}, cfg);
  const RenameEntry& e = r.residual.map.entries.at(0);
  CHECK(e.name == "conj__1");
  CHECK(e.renamed.arity() == 5);
  CHECK(e.vars.size() == 5);
}
