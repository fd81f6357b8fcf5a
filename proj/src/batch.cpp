#include "pd/batch.hpp"

#include <iomanip>
#include <sstream>
#include <map>

#include "pd/interpreter.hpp"
#include "pd/syntax.hpp"

namespace pd {

namespace {

Term canonical(const Term& t, std::map<Var, Term>& names) {
  if (t.is_var()) {
    auto [it, fresh] = names.emplace(t.var(), Term{});
    if (fresh) it->second = Term::variable("_V" + std::to_string(names.size()));
    return it->second;
  }
  if (t.is_ground()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(canonical(a, names));
  return Term::make(t.functor(), std::move(args));
}

}  // namespace

std::set<std::string> canonical_answers(const Conjunction& goal, const std::vector<Substitution>& answers) {
  std::vector<Term> qv;
  for (const auto& v : vars_of(goal)) qv.push_back(Term::variable(v));
  Term tuple = Term::make("ans", qv);
  std::set<std::string> out;
  for (const auto& a : answers) {
    std::map<Var, Term> names;
    out.insert(to_string(canonical(apply(tuple, a), names)));
  }
  return out;
}

CompareRow compare_query(const CompareJob& job, const Conjunction& goal) {
  CompareRow row;
  row.query = to_string(goal);
  try {
    RunResult orig = run_query(*job.original, goal, job.max_steps);
    RunResult via_interface = run_query(*job.specialized, goal, job.max_steps);
    auto expected = canonical_answers(goal, orig.answers);
    row.steps_original = orig.resolution_steps;
    row.answers_equal = expected == canonical_answers(goal, via_interface.answers);
    row.complete = orig.exhausted && via_interface.exhausted;
    row.steps_specialized = via_interface.resolution_steps;
    if (auto folded = fold_goal(goal, *job.map, *job.original)) {
      row.closed = true;
      RunResult direct = run_query(*job.specialized, *folded, job.max_steps);
      row.steps_specialized = direct.resolution_steps;
      row.complete = row.complete && direct.exhausted;
      // The folded goal has the same variables as the original one.
      row.answers_equal = row.answers_equal && expected == canonical_answers(goal, direct.answers);
    }
  } catch (const std::exception& e) {
    row.error = e.what();
    row.answers_equal = false;
  }
  row.ratio = row.steps_original ? double(row.steps_specialized) / double(row.steps_original) : 0.0;
  return row;
}

std::vector<CompareRow> run_batch_serial(const CompareJob& job, const std::vector<Conjunction>& goals) {
  std::vector<CompareRow> rows;
  rows.reserve(goals.size());
  for (const auto& g : goals) rows.push_back(compare_query(job, g));
  return rows;
}

std::vector<CompareRow> run_batch_parallel(const CompareJob& job, const std::vector<Conjunction>& goals) {
  std::vector<CompareRow> rows(goals.size());
  const long n = static_cast<long>(goals.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) rows[i] = compare_query(job, goals[i]);
  return rows;
}

std::string format_table(const std::vector<CompareRow>& rows) {
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r.query.size());
  std::ostringstream os;
  os << std::left << std::setw(int(width)) << "query" << "  closed  equal  " << std::right << std::setw(10) << "orig"
     << "  " << std::setw(10) << "residual" << "  " << std::setw(6) << "ratio" << "\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(int(width)) << r.query << "  " << std::setw(6) << (r.closed ? "yes" : "no") << "  "
       << std::setw(5) << (r.answers_equal ? "yes" : "no") << "  " << std::right << std::setw(10) << r.steps_original
       << "  " << std::setw(10) << r.steps_specialized << "  " << std::setw(6) << std::fixed << std::setprecision(3)
       << r.ratio;
    if (!r.complete) os << "  (step budget hit)";
    if (!r.error.empty()) os << "  error: " << r.error;
    os << "\n";
  }
  return os.str();
}

nlohmann::ordered_json rows_json(const std::vector<CompareRow>& rows) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["query"] = r.query;
    o["closed"] = r.closed;
    o["answers_equal"] = r.answers_equal;
    o["steps_original"] = r.steps_original;
    o["steps_specialized"] = r.steps_specialized;
    o["ratio"] = r.ratio;
    o["complete"] = r.complete;
    if (!r.error.empty()) o["error"] = r.error;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace pd
