#include "pd/options.hpp"

#include <charconv>

namespace pd {

namespace {

int depth_suffix(const std::string& s, const std::string& what) {
  int k = 0;
  const char* first = s.data() + 6;
  auto [p, ec] = std::from_chars(first, s.data() + s.size(), k);
  if (ec != std::errc{} || p != s.data() + s.size() || k < 1) throw OptionError("bad depth in " + what + ": " + s);
  return k;
}

}  // namespace

void apply_local(GlobalConfig& cfg, const std::string& s) {
  LocalConfig& l = cfg.local;
  if (s.rfind("depth:", 0) == 0) {
    l.strategy = Strategy::depth_bound;
    l.depth = depth_suffix(s, "--local");
  } else if (s == "det") {
    l.strategy = Strategy::determinate;
    l.lookahead = 0;
  } else if (s == "det1") {
    l.strategy = Strategy::determinate;
    l.lookahead = 1;
  } else if (s == "shower") {
    l.strategy = Strategy::shower;
  } else if (s == "fork") {
    l.strategy = Strategy::fork;
  } else if (s == "beam") {
    l.strategy = Strategy::beam;
  } else if (s == "ecce") {
    l.strategy = Strategy::ecce;
  } else {
    throw OptionError("unknown --local value: " + s);
  }
}

void apply_order(GlobalConfig& cfg, const std::string& s) {
  if (s == "embed")
    cfg.local.safety_order.type = OrderType::embedding;
  else if (s == "termsize")
    cfg.local.safety_order.type = OrderType::termsize_wfo;
  else
    throw OptionError("unknown --order value: " + s);
}

void apply_global(GlobalConfig& cfg, const std::string& s) {
  if (s == "variant")
    cfg.covered_mode = CoveredMode::variant;
  else if (s == "instance")
    cfg.covered_mode = CoveredMode::instance;
  else if (s == "chtree")
    cfg.covered_mode = CoveredMode::instance_plus_chtree;
  else
    throw OptionError("unknown --global value: " + s);
}

void apply_whistle(GlobalConfig& cfg, const std::string& s) {
  if (s.rfind("depth:", 0) == 0) {
    cfg.whistle_mode = WhistleMode::none_with_depth;
    cfg.whistle_depth = depth_suffix(s, "--whistle");
  } else if (s == "embed") {
    cfg.whistle_mode = WhistleMode::embedding;
  } else if (s == "embed-chtree") {
    cfg.whistle_mode = WhistleMode::embedding_plus_chtree;
  } else if (s == "wfo") {
    cfg.whistle_mode = WhistleMode::termsize_wfo;
  } else {
    throw OptionError("unknown --whistle value: " + s);
  }
}

}  // namespace pd
