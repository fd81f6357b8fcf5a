#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pd/sld.hpp"
#include "pd/terms.hpp"

namespace pd {

struct RenameEntry {
  Conjunction label;
  std::string name;       // fresh predicate symbol
  std::vector<Var> vars;  // distinct label variables, first-occurrence order
  Term renamed;           // the renamed atom defined to be equivalent to the label
  bool atomic() const { return label.size() == 1 && !label[0].negative; }
};

struct RenameMap {
  std::vector<RenameEntry> entries;  // in A-set order

  const RenameEntry* find(const Conjunction& label) const;
};

struct Residual {
  Program program;  // renamed resultants followed by the interface clauses
  std::vector<Clause> interface;
  RenameMap map;
};

// Builds the rename map for `labels` and folds every resultant into renamed
// form. Without filtering, atomic labels keep their argument list; with it,
// each label keeps one argument per distinct variable.
Residual filter_and_rename(const std::vector<Conjunction>& labels,
                           const std::vector<std::vector<Resultant>>& resultants, bool filtering,
                           const Program& original);

// One clause `A :- r(V)` per atomic label.
std::vector<Clause> build_interface(const RenameMap& map);

// Rename-map comments, residual clauses, then interface clauses.
std::string emit_program(const Residual& r);

// Reads back the `% r(V) == label` comment lines of an emitted program.
RenameMap parse_rename_map(std::string_view text);

// Replaces the user literals of `goal` by renamed atoms. Fails when some user
// literal is not covered by a label instance, i.e. the goal is not closed.
std::optional<Conjunction> fold_goal(const Conjunction& goal, const RenameMap& map,
                                     const Program& original);

}  // namespace pd
