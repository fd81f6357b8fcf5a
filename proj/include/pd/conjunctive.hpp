#pragma once

#include <vector>

#include "pd/terms.hpp"

namespace pd {

struct SplitPlan {
  std::vector<Conjunction> parts;  // contiguous; concatenation is the input
  std::size_t matched_index = 0;
  // The matched part lines up with the ancestor predicate by predicate.
  bool full_match = false;
};

// Picks the window of `c` with the ancestor's length that agrees with it on
// the most positions (polarity and predicate), leftmost on ties. Without a
// fully agreeing window every conjunct becomes its own part.
SplitPlan split_conjunction(const Conjunction& c, const Conjunction& ancestor);

// Positionwise msg sharing one disagreement memo across the conjuncts.
// Requires equal length and matching predicates.
Conjunction best_match_msg(const Conjunction& window, const Conjunction& ancestor, VarFactory& vf);

// Atoms a leaf contributes to the global tree when labels are single atoms:
// positive user atoms and the atoms under negation. Built-ins and open
// predicates stay in the residual code.
std::vector<Conjunction> atomic_parts(const Conjunction& leaf, const Program& p);

// Cuts a leaf into maximal contiguous runs of user literals linked by shared
// variables. Runs longer than `max_len`, and runs without a positive atom,
// are broken into atomic parts.
std::vector<Conjunction> conjunctive_parts(const Conjunction& leaf, const Program& p,
                                           std::size_t max_len = 8);

}  // namespace pd
