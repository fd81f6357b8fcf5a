#pragma once

#include <stdexcept>
#include <string>

#include "pd/global.hpp"

namespace pd {

class OptionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Command-line spellings: depth:<k>|det|det1|shower|fork|beam|ecce,
// embed|termsize, variant|instance|chtree, embed|embed-chtree|wfo|depth:<k>.
void apply_local(GlobalConfig& cfg, const std::string& s);
void apply_order(GlobalConfig& cfg, const std::string& s);
void apply_global(GlobalConfig& cfg, const std::string& s);
void apply_whistle(GlobalConfig& cfg, const std::string& s);

}  // namespace pd
