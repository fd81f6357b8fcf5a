#include "pd/char_trees.hpp"

#include "pd/orders.hpp"

namespace pd {

CharTree characteristic_tree(const SldTree& t) {
  CharTree out;
  for (std::size_t leaf : branch_leaves(t)) {
    CharBranch b;
    for (auto& [pos, tag] : path_steps(t, leaf)) b.push_back(CharStep{pos + 1, tag});
    out.branches.push_back(std::move(b));
  }
  return out;
}

namespace {

Term tag_term(const StepTag& tag) {
  switch (tag.kind) {
    case StepTag::Kind::clause: return Term::make(std::to_string(tag.clause));
    case StepTag::Kind::builtin: return Term::make("$builtin", {Term::make(tag.builtin)});
    case StepTag::Kind::negation: return Term::make("$negation");
  }
  return Term::make("?");
}

}  // namespace

Term encode(const CharTree& t) {
  Term tree = Term::make("nil");
  for (auto b = t.branches.rbegin(); b != t.branches.rend(); ++b) {
    Term branch = Term::make("end");
    for (auto s = b->rbegin(); s != b->rend(); ++s) {
      Term step = Term::make("cs", {Term::make(std::to_string(s->position)), tag_term(s->tag)});
      branch = Term::make("st", {step, branch});
    }
    tree = Term::make("br", {branch, tree});
  }
  return tree;
}

bool chtree_embedded(const CharTree& t1, const CharTree& t2) {
  return embedded(encode(t1), encode(t2), FunctorClass{nullptr});
}

std::string to_string(const CharTree& t) {
  std::string out = "{";
  for (std::size_t i = 0; i < t.branches.size(); ++i) {
    if (i) out += ", ";
    out += "<";
    for (std::size_t j = 0; j < t.branches[i].size(); ++j) {
      if (j) out += ", ";
      out += std::to_string(t.branches[i][j].position) + ":" + t.branches[i][j].tag.str();
    }
    out += ">";
  }
  return out + "}";
}

}  // namespace pd
