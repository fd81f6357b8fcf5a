#pragma once

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "pd/codegen.hpp"
#include "pd/terms.hpp"

namespace pd {

// Answers printed with variables numbered by first occurrence, so two answer
// lists compare equal as sets exactly when they agree modulo renaming.
std::set<std::string> canonical_answers(const Conjunction& goal, const std::vector<Substitution>& answers);

struct CompareRow {
  std::string query;
  bool closed = false;         // the goal folds onto the rename map
  bool answers_equal = false;  // original vs. interface (and folded goal when closed)
  std::size_t steps_original = 0;
  std::size_t steps_specialized = 0;  // folded goal when closed, interface otherwise
  double ratio = 0;
  bool complete = true;  // no run hit the step budget
  std::string error;
};

struct CompareJob {
  const Program* original = nullptr;
  const Program* specialized = nullptr;
  const RenameMap* map = nullptr;
  std::size_t max_steps = 1000000;
};

CompareRow compare_query(const CompareJob& job, const Conjunction& goal);

// Rows come back in input order. The parallel runner splits the rows over
// OpenMP threads; each row owns its interpreter state.
std::vector<CompareRow> run_batch_serial(const CompareJob& job, const std::vector<Conjunction>& goals);
std::vector<CompareRow> run_batch_parallel(const CompareJob& job, const std::vector<Conjunction>& goals);

std::string format_table(const std::vector<CompareRow>& rows);
nlohmann::ordered_json rows_json(const std::vector<CompareRow>& rows);

}  // namespace pd
