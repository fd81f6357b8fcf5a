#include <algorithm>

#include "doctest.h"
#include "gen.hpp"
#include "oracle.hpp"
#include "pd/batch.hpp"
#include "pd/char_trees.hpp"
#include "pd/conjunctive.hpp"
#include "pd/generalize.hpp"
#include "pd/global.hpp"
#include "pd/interpreter.hpp"
#include "pd/options.hpp"
#include "pd/orders.hpp"
#include "pd/sld.hpp"
#include "support.hpp"

using namespace pd;
using pdtest::G;
using pdtest::T;

namespace {

constexpr int kSamples = 300;

bool variant(const Term& a, const Term& b) { return instance_check(a, b) == InstanceRel::variant; }

Term rand_term(pdtest::Gen& g) { return T(g.term(3)); }

// A node is live when some leaf below it did not fail.
std::vector<bool> live_nodes(const SldTree& t) {
  std::vector<bool> live(t.nodes.size(), false);
  for (std::size_t i = t.nodes.size(); i-- > 0;) {
    const SldNode& n = t.nodes[i];
    if (n.children.empty()) {
      live[i] = n.status != NodeStatus::fail;
      continue;
    }
    for (const auto& e : n.children) live[i] = live[i] || live[e.child];
  }
  return live;
}

std::vector<std::size_t> branching_nodes(const SldTree& t) {
  auto live = live_nodes(t);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    int k = 0;
    for (const auto& e : t.nodes[i].children) k += live[e.child];
    if (k > 1) out.push_back(i);
  }
  return out;
}

std::vector<LocalConfig> local_configs() {
  std::vector<LocalConfig> out;
  for (const char* s : {"depth:1", "depth:2", "det", "det1", "shower", "fork", "beam", "ecce"})
    for (const char* o : {"embed", "termsize"}) {
      GlobalConfig g;
      apply_local(g, s);
      apply_order(g, o);
      out.push_back(g.local);
    }
  return out;
}

}  // namespace

TEST_CASE("property: unifiers unify and are idempotent") {
  pdtest::Gen g(11);
  int unified = 0;
  for (int i = 0; i < kSamples * 3; ++i) {
    Term s = rand_term(g), t = rand_term(g);
    auto m = unify(s, t);
    if (!m) continue;
    ++unified;
    Term st = apply(s, *m);
    CHECK(st == apply(t, *m));
    CHECK(apply(st, *m) == st);
  }
  CHECK(unified > 50);
}

TEST_CASE("property: composition applies left to right") {
  pdtest::Gen g(12);
  for (int i = 0; i < kSamples; ++i) {
    Term t = rand_term(g);
    auto a = unify(rand_term(g), rand_term(g));
    auto b = unify(rand_term(g), rand_term(g));
    if (!a || !b) continue;
    CHECK(apply(apply(t, *a), *b) == apply(t, compose(*a, *b)));
  }
}

TEST_CASE("property: msg generalizes both sides, commutes and is idempotent") {
  pdtest::Gen g(13);
  for (int i = 0; i < kSamples; ++i) {
    Term s = rand_term(g), t = rand_term(g);
    VarFactory vf(5000);
    auto r = msg(s, t, vf);
    CHECK(apply(r.generalization, r.theta1) == s);
    CHECK(apply(r.generalization, r.theta2) == t);
    CHECK(variant(r.generalization, msg(t, s, vf).generalization));
    CHECK(variant(msg(s, s, vf).generalization, s));
    // Any instance relation between the inputs is reflected by the msg.
    if (match(t, s)) CHECK(variant(r.generalization, t));
  }
}

TEST_CASE("property: embedding is reflexive, transitive on samples and admits diving") {
  pdtest::Gen g(14);
  int chains = 0;
  for (int i = 0; i < kSamples; ++i) {
    Term a = rand_term(g), b = rand_term(g), c = rand_term(g);
    CHECK(embedded(a, a));
    CHECK(embedded(a, Term::make("f", {a})));
    CHECK(embedded(a, Term::make("g", {b, a})));
    CHECK_FALSE(embedded(Term::make("f", {a}), a));
    if (embedded(a, b) && embedded(b, c)) {
      ++chains;
      CHECK(embedded(a, c));
    }
  }
  CHECK(chains > 0);
}

TEST_CASE("property: printing and parsing round trip up to variable names") {
  pdtest::Gen g(15);
  for (int i = 0; i < kSamples; ++i) {
    Term t = rand_term(g);
    CHECK(variant(parse_term(to_string(t)), t));
  }
}

TEST_CASE("property: the interpreter agrees with a recursive reference solver") {
  pdtest::Gen g(16);
  for (const auto& w : pdtest::corpus_workloads()) {
    Program p = pdtest::corpus(w.file);
    for (int i = 0; i < 60; ++i) {
      Conjunction q = G(w.query(g));
      CAPTURE(to_string(q));
      RunResult r = run_query(p, q, 100000);
      pdtest::OracleResult o = pdtest::Oracle(p, 100000).run(q);
      REQUIRE(r.answers.size() == o.answers.size());
      CHECK(r.resolution_steps == o.steps);
      CHECK(r.exhausted == o.complete);
      std::vector<Term> qv;
      for (const auto& v : vars_of(q)) qv.push_back(Term::variable(v));
      Term tuple = Term::make("ans", qv);
      for (std::size_t k = 0; k < o.answers.size(); ++k) CHECK(variant(apply(tuple, r.answers[k]), o.answers[k]));
    }
  }
}

TEST_CASE("property: resultant heads instantiate the root and match live leaves") {
  pdtest::Gen g(17);
  auto locals = local_configs();
  for (const auto& w : pdtest::corpus_workloads()) {
    Program p = pdtest::corpus(w.file);
    for (int i = 0; i < 20; ++i) {
      Conjunction q = G(g.coin() ? w.goal : w.query(g));
      const LocalConfig& cfg = g.pick(locals);
      VarFactory vf(100000);
      SldTree t = unfold(p, q, cfg, vf);
      auto rs = resultants(t);
      auto live = branch_leaves(t);
      CAPTURE(to_string(q));
      CHECK(rs.size() == live.size());
      for (const auto& r : rs) CHECK(is_instance_of(r.head, q));
    }
  }
}

TEST_CASE("property: covering ancestors share the predicate and are admissible") {
  pdtest::Gen g(18);
  for (const auto& w : pdtest::corpus_workloads()) {
    Program p = pdtest::corpus(w.file);
    FunctorClass fc{&p.static_functors};
    for (const char* strategy : {"det", "det1", "shower", "fork", "beam", "ecce"}) {
      GlobalConfig gc;
      apply_local(gc, strategy);
      for (int i = 0; i < 5; ++i) {
        Conjunction q = G(i == 0 ? w.goal : w.query(g));
        VarFactory vf(100000);
        SldTree t = unfold(p, q, gc.local, vf);
        for (const auto& n : t.nodes) {
          if (n.children.empty() || n.covering.empty()) continue;
          const Literal& sel = n.covering.back();
          CAPTURE(to_string(q));
          CAPTURE(strategy);
          for (const auto& a : n.covering) CHECK(a.sig() == sel.sig());
          CHECK(admissible(n.covering, gc.local.safety_order, fc));
        }
      }
    }
  }
}

TEST_CASE("property: determinate-family trees branch at most once") {
  pdtest::Gen g(19);
  for (const auto& w : pdtest::corpus_workloads()) {
    Program p = pdtest::corpus(w.file);
    for (const char* strategy : {"det", "det1", "shower", "fork", "beam"}) {
      GlobalConfig gc;
      apply_local(gc, strategy);
      for (int i = 0; i < 8; ++i) {
        Conjunction q = G(i == 0 ? w.goal : w.query(g));
        VarFactory vf(100000);
        SldTree t = unfold(p, q, gc.local, vf);
        auto b = branching_nodes(t);
        CAPTURE(to_string(q));
        CAPTURE(strategy);
        CHECK(b.size() <= 1);
        if (b.empty()) continue;
        std::string s = strategy;
        // The determinate shapes only branch on the forced first step.
        if (s == "det" || s == "det1" || s == "shower") CHECK(b[0] == 0);
        if (s == "fork")
          for (const auto& e : t.nodes[b[0]].children) CHECK(t.nodes[e.child].children.size() <= 1);
      }
    }
  }
}

TEST_CASE("property: characteristic trees ignore variable names") {
  pdtest::Gen g(20);
  auto locals = local_configs();
  for (const auto& w : pdtest::corpus_workloads()) {
    Program p = pdtest::corpus(w.file);
    for (int i = 0; i < 10; ++i) {
      Conjunction q = G(i == 0 ? w.goal : w.query(g));
      const LocalConfig& cfg = g.pick(locals);
      VarFactory vf1(100000), vf2(900000);
      Conjunction renamed = rename_apart(q, vf2);
      CAPTURE(to_string(q));
      CHECK(characteristic_tree(unfold(p, q, cfg, vf1)) == characteristic_tree(unfold(p, renamed, cfg, vf2)));
    }
  }
}

TEST_CASE("property: conjunctive parts concatenate back to the user atoms of a leaf") {
  Program p = pdtest::program(
      "p(X) :- q(X).\nq(a).\nr(X,Y) :- p(X).\n"
      "s(X) :- X = a.\n");
  pdtest::Gen g(21);
  for (int i = 0; i < kSamples; ++i) {
    std::string text;
    int n = 1 + g.below(7);
    for (int k = 0; k < n; ++k) {
      std::string v1 = "X" + std::to_string(g.below(5)), v2 = "X" + std::to_string(g.below(5));
      std::string lit;
      switch (g.below(5)) {
        case 0: lit = "p(" + v1 + ")"; break;
        case 1: lit = "r(" + v1 + "," + v2 + ")"; break;
        case 2: lit = "\\+ q(" + v1 + ")"; break;
        case 3: lit = v1 + " = " + v2; break;
        default: lit = "s(" + v1 + ")"; break;
      }
      text += (k ? ", " : "") + lit;
    }
    Conjunction leaf = G(text);
    std::size_t max_len = 1 + g.below(4);
    std::vector<Term> expected, got;
    for (const auto& l : leaf)
      if (!is_builtin(l.sig())) expected.push_back(l.atom);
    for (const auto& part : conjunctive_parts(leaf, p, max_len)) {
      CHECK(part.size() <= max_len);
      CHECK(std::any_of(part.begin(), part.end(), [](const Literal& l) { return !l.negative; }));
      for (const auto& l : part) got.push_back(l.atom);
    }
    CAPTURE(text);
    CHECK(got == expected);
  }
}

TEST_CASE("property: specialization terminates closed and filtering keeps answers") {
  pdtest::Gen g(22);
  for (const auto& w : pdtest::corpus_workloads()) {
    Program p = pdtest::corpus(w.file);
    GlobalConfig plain, unfiltered;
    unfiltered.filtering = false;
    SpecResult a = specialize(p, {G(w.goal)}, plain);
    SpecResult b = specialize(p, {G(w.goal)}, unfiltered);
    for (const SpecResult* r : {&a, &b})
      for (const auto& c : r->residual.program.clauses)
        for (const auto& l : c.body)
          if (!is_builtin(l.sig()) && !p.is_open(l.sig())) CHECK(r->residual.program.defines(l.sig()));
    for (int i = 0; i < 30; ++i) {
      Conjunction q = G(w.query(g));
      CAPTURE(to_string(q));
      auto ra = run_query(a.residual.program, q, 100000);
      auto rb = run_query(b.residual.program, q, 100000);
      REQUIRE(ra.exhausted);
      REQUIRE(rb.exhausted);
      CHECK(canonical_answers(q, ra.answers) == canonical_answers(q, rb.answers));
    }
  }
}
