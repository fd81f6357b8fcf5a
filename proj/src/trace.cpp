#include "pd/trace.hpp"

#include "pd/syntax.hpp"

namespace pd {

nlohmann::ordered_json chtree_json(const CharTree& t) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& b : t.branches) {
    auto branch = nlohmann::ordered_json::array();
    for (const auto& s : b) {
      nlohmann::ordered_json tag;
      if (s.tag.kind == StepTag::Kind::clause)
        tag = s.tag.clause;
      else
        tag = s.tag.str();
      branch.push_back({s.position, tag});
    }
    out.push_back(std::move(branch));
  }
  return out;
}

nlohmann::ordered_json trace_json(const GlobalTree& t) {
  nlohmann::ordered_json j;
  j["v"] = 1;
  j["steps"] = t.steps;
  auto nodes = nlohmann::ordered_json::array();
  for (const auto& n : t.nodes) {
    nlohmann::ordered_json o;
    VarNamer names;
    o["id"] = n.id;
    o["label"] = to_string(n.label, names);
    o["mark"] = to_string(n.mark);
    o["parent"] = n.parent ? nlohmann::ordered_json(*n.parent) : nlohmann::ordered_json(nullptr);
    o["children"] = n.children;
    o["covered_by"] = n.covered_by ? nlohmann::ordered_json(*n.covered_by) : nlohmann::ordered_json(nullptr);
    o["removed"] = n.removed;
    o["chtree"] = n.chtree ? chtree_json(*n.chtree) : nlohmann::ordered_json(nullptr);
    nodes.push_back(std::move(o));
  }
  j["nodes"] = std::move(nodes);
  auto events = nlohmann::ordered_json::array();
  for (const auto& e : t.events) {
    nlohmann::ordered_json o;
    o["event"] = e.kind;
    o["node"] = e.node;
    o["other"] = e.other ? nlohmann::ordered_json(*e.other) : nlohmann::ordered_json(nullptr);
    o["label"] = e.detail;
    events.push_back(std::move(o));
  }
  j["events"] = std::move(events);
  return j;
}

}  // namespace pd
