#pragma once

#include <optional>

#include "pd/terms.hpp"

namespace pd {

template <class E>
struct MsgResult {
  E generalization;
  Substitution theta1;  // generalization -> first input
  Substitution theta2;  // generalization -> second input
};

// Most specific generalization. Equal disagreement pairs share one fresh
// variable across the whole expression, including across conjuncts.
MsgResult<Term> msg(const Term& a, const Term& b, VarFactory& vf);
// Fails when polarity or predicate differ.
std::optional<MsgResult<Literal>> msg(const Literal& a, const Literal& b, VarFactory& vf);
// Fails on unequal length or any positionwise predicate mismatch.
std::optional<MsgResult<Conjunction>> msg(const Conjunction& a, const Conjunction& b, VarFactory& vf);

}  // namespace pd
