#pragma once

#include "json.hpp"
#include "pd/char_trees.hpp"
#include "pd/global.hpp"

namespace pd {

// Arrays of branches, each an array of [position, tag] pairs. Clause tags are
// numbers; built-in and negation tags are strings.
nlohmann::ordered_json chtree_json(const CharTree& t);

nlohmann::ordered_json trace_json(const GlobalTree& t);

}  // namespace pd
