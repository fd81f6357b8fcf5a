#pragma once

#include <string>
#include <vector>

#include "pd/sld.hpp"
#include "pd/terms.hpp"

namespace pd {

struct CharStep {
  std::size_t position = 1;  // 1-based
  StepTag tag;

  friend bool operator==(const CharStep&, const CharStep&) = default;
  friend auto operator<=>(const CharStep&, const CharStep&) = default;
};

using CharBranch = std::vector<CharStep>;

struct CharTree {
  std::vector<CharBranch> branches;  // non-failing branches, left to right

  friend bool operator==(const CharTree&, const CharTree&) = default;
};

CharTree characteristic_tree(const SldTree& t);

// Ground term over static functors: br(Branch, Rest) / nil for the tree,
// st(cs(Pos, Tag), Rest) / end for a branch.
Term encode(const CharTree& t);

// True when t1 is embedded in t2, i.e. t2 grew out of t1.
bool chtree_embedded(const CharTree& t1, const CharTree& t2);

// {<1:1>, <1:2, 1:3>}
std::string to_string(const CharTree& t);

}  // namespace pd
