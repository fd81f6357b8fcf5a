#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pd/batch.hpp"
#include "pd/builtins.hpp"
#include "pd/codegen.hpp"
#include "pd/global.hpp"
#include "pd/interpreter.hpp"
#include "pd/options.hpp"
#include "pd/syntax.hpp"
#include "pd/trace.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kBudget = 3;
constexpr int kRuntimeError = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

pd::Program load(const std::string& path) {
  pd::Program p = pd::parse_program(read_file(path));
  p.reindex();
  return p;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string answer_line(const pd::Conjunction& goal, const pd::Substitution& s) {
  auto vars = pd::vars_of(goal);
  std::string line;
  pd::VarNamer names;
  for (const auto& v : vars) {
    if (v.name.rfind('_', 0) == 0) continue;
    const pd::Term* t = s.lookup(v);
    if (!line.empty()) line += ", ";
    line += v.name + " = " + (t ? pd::to_string(*t, names) : v.name);
  }
  return line.empty() ? "true" : line;
}

struct SpecializeArgs {
  std::string file;
  std::vector<std::string> goals;
  std::string out;
  std::string local = "ecce";
  std::string order = "embed";
  std::string global = "instance";
  std::string whistle = "embed";
  bool conjunctive = false;
  bool filter = true;
  bool leftmost_only = false;
  bool relabel_ancestor = false;
  std::string trace;
  std::size_t max_nodes = 10000;
  std::size_t max_steps = 1000000;
};

int cmd_specialize(const SpecializeArgs& a) {
  pd::Program p;
  std::vector<pd::Conjunction> goals;
  pd::GlobalConfig cfg;
  try {
    p = load(a.file);
    for (const auto& g : a.goals) goals.push_back(pd::parse_goal(g));
    pd::apply_local(cfg, a.local);
    pd::apply_order(cfg, a.order);
    pd::apply_global(cfg, a.global);
    pd::apply_whistle(cfg, a.whistle);
  } catch (const pd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  cfg.conjunctive = a.conjunctive;
  cfg.filtering = a.filter;
  cfg.local.leftmost_only = a.leftmost_only;
  cfg.relabel_ancestor = a.relabel_ancestor;
  cfg.max_nodes = a.max_nodes;
  cfg.max_steps = a.max_steps;
  try {
    pd::SpecResult r = pd::specialize(p, goals, cfg);
    write_out(a.out, pd::emit_program(r.residual));
    if (!a.trace.empty()) write_out(a.trace, pd::trace_json(r.trace).dump(2) + "\n");
  } catch (const pd::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    if (!a.trace.empty()) write_out(a.trace, pd::trace_json(e.trace).dump(2) + "\n");
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kOk;
}

int cmd_run(const std::string& file, const std::string& goal_text, std::size_t max_steps) {
  pd::Program p;
  pd::Conjunction goal;
  try {
    p = load(file);
    goal = pd::parse_goal(goal_text);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  }
  try {
    pd::RunResult r = pd::run_query(p, goal, max_steps);
    for (const auto& s : r.answers) std::cout << answer_line(goal, s) << "\n";
    std::cout << "steps: " << r.resolution_steps << (r.exhausted ? "" : " (exhausted)") << "\n";
  } catch (const pd::Floundering& e) {
    std::cerr << "floundering: " << e.what() << "\n";
    return kRuntimeError;
  } catch (const pd::InstantiationError& e) {
    std::cerr << "instantiation error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kOk;
}

int cmd_compare(const std::string& original, const std::string& specialized, const std::string& goals_file,
                std::size_t max_steps, bool json, bool parallel) {
  pd::Program orig, residual;
  pd::RenameMap map;
  std::vector<pd::Conjunction> goals;
  try {
    orig = load(original);
    std::string residual_text = read_file(specialized);
    residual = pd::parse_program(residual_text);
    residual.reindex();
    map = pd::parse_rename_map(residual_text);
    std::istringstream in(read_file(goals_file));
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '%') continue;
      goals.push_back(pd::parse_goal(line));
    }
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  }
  pd::CompareJob job{&orig, &residual, &map, max_steps};
  auto rows = parallel ? pd::run_batch_parallel(job, goals) : pd::run_batch_serial(job, goals);
  if (json)
    std::cout << pd::rows_json(rows).dump(2) << "\n";
  else
    std::cout << pd::format_table(rows);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial deduction for definite and normal logic programs"};
  app.require_subcommand(1);

  SpecializeArgs sa;
  auto* sp = app.add_subcommand("specialize", "Specialize a program for the given goals");
  sp->add_option("file", sa.file, "Program file")->required();
  sp->add_option("--goal", sa.goals, "Goal to specialize for (repeatable)")->required();
  sp->add_option("--out", sa.out, "Output file (default: standard output)");
  sp->add_option("--local", sa.local, "depth:<k>|det|det1|shower|fork|beam|ecce");
  sp->add_option("--order", sa.order, "embed|termsize");
  sp->add_option("--global", sa.global, "variant|instance|chtree");
  sp->add_option("--whistle", sa.whistle, "embed|embed-chtree|wfo|depth:<k>");
  sp->add_flag("--conjunctive", sa.conjunctive, "Keep whole conjunctions as specialization units");
  sp->add_flag("--filter,!--no-filter", sa.filter, "Argument filtering (default on)");
  sp->add_flag("--leftmost-only", sa.leftmost_only, "Only unfold the leftmost literal");
  sp->add_flag("--relabel-ancestor", sa.relabel_ancestor,
              "On a whistle, generalize the ancestor and drop its subtree");
  sp->add_option("--trace", sa.trace, "Write the global tree as JSON");
  sp->add_option("--max-nodes", sa.max_nodes, "Global tree node cap");
  sp->add_option("--max-steps", sa.max_steps, "Resolution step cap for unfolding");

  std::string run_file, run_goal;
  std::size_t run_steps = 1000000;
  auto* run = app.add_subcommand("run", "Run a goal and print its answers");
  run->add_option("file", run_file, "Program file")->required();
  run->add_option("--goal", run_goal, "Goal")->required();
  run->add_option("--max-steps", run_steps, "Resolution step cap");

  std::string cmp_orig, cmp_residual, cmp_goals;
  std::size_t cmp_steps = 1000000;
  bool cmp_json = false, cmp_serial = false;
  auto* cmp = app.add_subcommand("compare", "Compare answers and step counts of two programs");
  cmp->add_option("original", cmp_orig, "Original program")->required();
  cmp->add_option("specialized", cmp_residual, "Specialized program (with its rename map comments)")->required();
  cmp->add_option("--goals", cmp_goals, "File with one goal per line")->required();
  cmp->add_option("--max-steps", cmp_steps, "Resolution step cap per run");
  cmp->add_flag("--json", cmp_json, "Print the report as JSON");
  cmp->add_flag("--serial", cmp_serial, "Evaluate rows on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParseError;
  }

  if (*sp) return cmd_specialize(sa);
  if (*run) return cmd_run(run_file, run_goal, run_steps);
  return cmd_compare(cmp_orig, cmp_residual, cmp_goals, cmp_steps, cmp_json, !cmp_serial);
}
