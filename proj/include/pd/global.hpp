#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pd/char_trees.hpp"
#include "pd/codegen.hpp"
#include "pd/sld.hpp"
#include "pd/terms.hpp"

namespace pd {

enum class CoveredMode { variant, instance, instance_plus_chtree };
enum class WhistleMode { embedding, embedding_plus_chtree, termsize_wfo, none_with_depth };

struct GlobalConfig {
  CoveredMode covered_mode = CoveredMode::instance;
  WhistleMode whistle_mode = WhistleMode::embedding;
  int whistle_depth = 0;  // k for none_with_depth
  bool conjunctive = false;
  bool filtering = true;
  // Generalize the ancestor and drop its subtree instead of relabeling the
  // node that triggered the whistle.
  bool relabel_ancestor = false;
  std::size_t max_label_length = 8;
  std::size_t max_nodes = 10000;
  std::size_t max_steps = 1000000;
  LocalConfig local;
};

enum class Mark { unmarked, processed, covered };
const char* to_string(Mark m);

struct GNode {
  std::size_t id = 0;
  Conjunction label;
  std::optional<CharTree> chtree;
  std::optional<SldTree> tree;  // unfolding of the current label, cached
  Mark mark = Mark::unmarked;
  std::optional<std::size_t> covered_by;
  std::optional<std::size_t> parent;  // none for children of the root
  std::vector<std::size_t> children;
  bool removed = false;
};

struct TraceEvent {
  std::string kind;  // covered, whistle, generalize, split, process, remove
  std::size_t node = 0;
  std::optional<std::size_t> other;
  std::string detail;
};

struct GlobalTree {
  std::vector<GNode> nodes;
  std::vector<TraceEvent> events;
  std::size_t steps = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, GlobalTree partial)
      : std::runtime_error(what), trace(std::move(partial)) {}
  GlobalTree trace;
};

struct ASetEntry {
  Conjunction label;
  CharTree chtree;
  SldTree tree;
};

struct SpecResult {
  std::vector<ASetEntry> a_set;
  Residual residual;
  GlobalTree trace;
};

SpecResult specialize(const Program& p, const std::vector<Conjunction>& goals, const GlobalConfig& cfg);

// Lower-level pieces, exposed for testing. `vf` supplies fresh variables for
// unfolding and generalization.
class GlobalSession {
 public:
  GlobalSession(const Program& p, const GlobalConfig& cfg);

  GlobalTree& tree() { return t_; }
  std::size_t add_node(Conjunction label, std::optional<std::size_t> parent);
  const CharTree& chtree(std::size_t n);
  const SldTree& unfolding(std::size_t n);

  std::optional<std::size_t> covered(std::size_t n);
  std::optional<std::size_t> whistle(std::size_t n);
  Conjunction generalize_node(std::size_t n, std::size_t w);

  // Runs the main loop until every node is marked.
  void run();
  std::vector<ASetEntry> a_set();

 private:
  std::vector<std::size_t> ancestors(std::size_t n) const;  // closest first
  void step(std::size_t n);
  void relabel(std::size_t n, Conjunction label);
  void remove_subtree(std::size_t n);
  void expand(std::size_t n);
  void check_budget();

  const Program& p_;
  GlobalConfig cfg_;
  VarFactory vf_{1};
  GlobalTree t_;
  std::vector<std::size_t> queue_;
  std::size_t head_ = 0;
};

}  // namespace pd
