#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pd/terms.hpp"

namespace pd {

// A non-ground negative literal reached selection at run time.
class Floundering : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunResult {
  std::vector<Substitution> answers;  // restricted to the query variables
  std::size_t resolution_steps = 0;
  // True when the whole search space was explored; false when max_steps cut
  // the search short.
  bool exhausted = false;
};

// Depth-first, leftmost, clause-order execution. Every successful resolution
// or built-in step counts one; a negation costs one plus the steps of its
// subsidiary search. Open and undefined predicates fail.
RunResult run_query(const Program& p, const Conjunction& goal, std::size_t max_steps,
                    UnifyOptions opt = {});

}  // namespace pd
