#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pd/terms.hpp"

namespace pd {

// Functors outside `statics` are dynamic. A null set means every functor is
// static (used for encodings such as characteristic trees).
struct FunctorClass {
  const SigSet* statics = nullptr;
  bool is_static(const Sig& s) const { return !statics || statics->count(s) != 0; }
};

bool embedded(const Term& s, const Term& t, FunctorClass fc = {});
bool embedded(const Literal& s, const Literal& t, FunctorClass fc = {});
// Conjunctions are read as right-nested binary terms over a static functor.
bool embedded(const Conjunction& s, const Conjunction& t, FunctorClass fc = {});

bool strictly_embedded(const Term& s, const Term& t, FunctorClass fc = {});
bool strictly_embedded(const Literal& s, const Literal& t, FunctorClass fc = {});
bool strictly_embedded(const Conjunction& s, const Conjunction& t, FunctorClass fc = {});

// Per-predicate argument positions (1-based) whose termsizes are summed.
class WfoConfig {
 public:
  std::vector<std::size_t> positions(const Sig& pred) const;
  void set_positions(const Sig& pred, std::vector<std::size_t> ps) { pos_[pred] = std::move(ps); }
  std::size_t weight(const Literal& l) const;
  bool decreasing(const std::vector<Literal>& seq) const;

  friend bool operator==(const WfoConfig&, const WfoConfig&) = default;

 private:
  std::map<Sig, std::vector<std::size_t>> pos_;
};

// Largest subset of the current positions under which `seq` strictly
// decreases; subsets of equal size are tried in lexicographic order.
std::optional<WfoConfig> refine_wfo(const std::vector<Literal>& seq, const WfoConfig& cfg);

enum class OrderType { termsize_wfo, embedding };

struct OrderKind {
  OrderType type = OrderType::embedding;
  WfoConfig wfo;
};

bool admissible_extension(const std::vector<Literal>& seq, const Literal& cand, const OrderKind& kind,
                          FunctorClass fc = {});
// Full re-check of a sequence.
bool admissible(const std::vector<Literal>& seq, const OrderKind& kind, FunctorClass fc = {});

}  // namespace pd
