#include "pd/codegen.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pd/syntax.hpp"

namespace pd {

const RenameEntry* RenameMap::find(const Conjunction& label) const {
  for (const auto& e : entries)
    if (is_variant(e.label, label)) return &e;
  return nullptr;
}

namespace {

bool user_literal(const Literal& l, const Program& p) {
  return !is_builtin(l.sig()) && !p.is_open(l.sig());
}

class Folder {
 public:
  Folder(const RenameMap& map, const Program& original) : map_(map), original_(original) {
    for (const auto& e : map.entries) max_len_ = std::max(max_len_, e.label.size());
  }

  std::optional<Conjunction> fold(const Conjunction& body) {
    body_ = &body;
    return from(0);
  }

 private:
  // Entries whose label the window is an instance of, most specific first,
  // otherwise in map order.
  std::vector<std::pair<const RenameEntry*, Substitution>> candidates(const Conjunction& window) {
    std::vector<std::pair<const RenameEntry*, Substitution>> found;
    Term target = tuple_term(window);
    for (const auto& e : map_.entries) {
      if (e.label.size() != window.size()) continue;
      if (auto m = match(tuple_term(e.label), target)) found.emplace_back(&e, std::move(*m));
    }
    std::vector<std::pair<const RenameEntry*, Substitution>> ordered;
    while (!found.empty()) {
      auto more_specific_exists = [&](const auto& c) {
        return std::any_of(found.begin(), found.end(), [&](const auto& o) {
          return instance_check(o.first->label, c.first->label) == InstanceRel::strict_instance;
        });
      };
      auto it = std::find_if_not(found.begin(), found.end(), more_specific_exists);
      if (it == found.end()) it = found.begin();
      ordered.push_back(std::move(*it));
      found.erase(it);
    }
    return ordered;
  }

  std::optional<Conjunction> from(std::size_t i) {
    const Conjunction& body = *body_;
    if (i == body.size()) return Conjunction{};
    for (std::size_t len = std::min(max_len_, body.size() - i); len >= 1; --len) {
      Conjunction window(body.begin() + i, body.begin() + i + len);
      bool all_user = std::all_of(window.begin(), window.end(),
                                  [&](const Literal& l) { return user_literal(l, original_); });
      if (!all_user) continue;
      for (auto& [e, m] : candidates(window)) {
        auto rest = from(i + len);
        if (!rest) continue;
        rest->insert(rest->begin(), pos(apply(e->renamed, m)));
        return rest;
      }
    }
    const Literal& l = body[i];
    if (!user_literal(l, original_)) {
      auto rest = from(i + 1);
      if (rest) rest->insert(rest->begin(), l);
      return rest;
    }
    if (l.negative) {
      for (auto& [e, m] : candidates({pos(l.atom)})) {
        auto rest = from(i + 1);
        if (!rest) continue;
        rest->insert(rest->begin(), neg(apply(e->renamed, m)));
        return rest;
      }
    }
    return std::nullopt;
  }

  const RenameMap& map_;
  const Program& original_;
  std::size_t max_len_ = 0;
  const Conjunction* body_ = nullptr;
};

std::set<std::string> symbol_names(const Program& p) {
  std::set<std::string> out;
  for (const auto& c : p.clauses) out.insert(c.head.functor());
  for (const auto& s : p.open_preds) out.insert(s.name);
  for (const auto& s : p.static_functors) out.insert(s.name);
  return out;
}

}  // namespace

Residual filter_and_rename(const std::vector<Conjunction>& labels,
                           const std::vector<std::vector<Resultant>>& resultants, bool filtering,
                           const Program& original) {
  Residual r;
  auto taken = symbol_names(original);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    RenameEntry e;
    e.label = labels[i];
    e.vars = vars_of(e.label);
    bool atomic = e.atomic();
    std::string name = (atomic ? e.label[0].pred() : std::string("conj")) + "__" + std::to_string(i + 1);
    while (!taken.insert(name).second) name += "_";
    e.name = name;
    if (atomic && !filtering) {
      e.renamed = Term::make(name, e.label[0].atom.args());
    } else {
      std::vector<Term> args;
      for (const auto& v : e.vars) args.push_back(Term::variable(v));
      e.renamed = Term::make(name, std::move(args));
    }
    r.map.entries.push_back(std::move(e));
  }

  Folder folder(r.map, original);
  int id = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const RenameEntry& e = r.map.entries[i];
    for (const auto& res : resultants[i]) {
      auto theta = match(tuple_term(e.label), tuple_term(res.head));
      if (!theta) throw std::logic_error("resultant head is not an instance of its label: " + to_string(res.head));
      auto body = folder.fold(res.body);
      if (!body)
        throw std::logic_error("closedness violated: no label covers " + to_string(res.body) + " (from " +
                               to_string(e.label) + ")");
      r.program.clauses.push_back(Clause{++id, apply(e.renamed, *theta), std::move(*body)});
    }
  }
  r.interface = build_interface(r.map);
  for (auto c : r.interface) {
    c.id = ++id;
    r.program.clauses.push_back(std::move(c));
  }
  r.program.open_preds = original.open_preds;
  r.program.static_functors = original.static_functors;
  for (const auto& c : r.program.clauses) {
    r.program.register_functors(c.head);
    r.program.register_functors(c.body);
  }
  r.program.reindex();
  return r;
}

std::vector<Clause> build_interface(const RenameMap& map) {
  std::vector<Clause> out;
  int id = 0;
  for (const auto& e : map.entries)
    if (e.atomic()) out.push_back(Clause{++id, e.label[0].atom, {pos(e.renamed)}});
  return out;
}

std::string emit_program(const Residual& r) {
  std::string out;
  for (const auto& e : r.map.entries) {
    VarNamer n;
    out += "% " + to_string(e.renamed, n) + " == " + to_string(e.label, n) + "\n";
  }
  return out + pretty(r.program);
}

RenameMap parse_rename_map(std::string_view text) {
  RenameMap map;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("% ", 0) != 0) continue;
    auto sep = line.find(" == ");
    if (sep == std::string::npos) continue;
    RenameEntry e;
    e.renamed = parse_term(line.substr(2, sep - 2));
    e.label = parse_goal(line.substr(sep + 4));
    e.name = e.renamed.functor();
    e.vars = vars_of(e.label);
    map.entries.push_back(std::move(e));
  }
  return map;
}

std::optional<Conjunction> fold_goal(const Conjunction& goal, const RenameMap& map, const Program& original) {
  Folder f(map, original);
  return f.fold(goal);
}

}  // namespace pd
