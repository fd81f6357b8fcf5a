#pragma once

#include <optional>
#include <stdexcept>

#include "pd/terms.hpp"

namespace pd {

class InstantiationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BuiltinEval { success, failure, residual };

struct BuiltinStep {
  BuiltinEval result = BuiltinEval::residual;
  Substitution mgu;
  // call/1 replaces itself with its argument.
  std::optional<Literal> replacement;
};

// Evaluates one built-in atom. With `runtime` set, cases that would stay
// residual during specialization are decided as Prolog would (`\=` fails on
// unifiable arguments) or raise InstantiationError.
BuiltinStep eval_builtin(const Term& atom, bool runtime, UnifyOptions opt = {});

}  // namespace pd
