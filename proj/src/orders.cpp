#include "pd/orders.hpp"

#include <unordered_map>

namespace pd {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& p) const {
    return std::hash<const void*>{}(p.first) * 31 + std::hash<const void*>{}(p.second);
  }
};

class Embedder {
 public:
  explicit Embedder(FunctorClass fc) : fc_(fc) {}

  bool term(const Term& s, const Term& t) {
    if (s.is_var()) {
      if (t.is_var()) return true;
      return dive(s, t);
    }
    if (t.is_var()) return false;
    auto key = std::make_pair(s.id(), t.id());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = couple(s, t) || dive(s, t);
    memo_.emplace(key, r);
    return r;
  }

  bool args_pairwise(const Term& s, const Term& t) {
    for (std::size_t i = 0; i < s.arity(); ++i)
      if (!term(s.arg(i), t.arg(i))) return false;
    return true;
  }

 private:
  bool couple(const Term& s, const Term& t) {
    if (s.functor() == t.functor() && s.arity() == t.arity()) return args_pairwise(s, t);
    return !fc_.is_static(s.sig()) && !fc_.is_static(t.sig());
  }

  bool dive(const Term& s, const Term& t) {
    if (t.is_var()) return false;
    for (const auto& a : t.args())
      if (term(s, a)) return true;
    return false;
  }

  FunctorClass fc_;
  std::unordered_map<std::pair<const void*, const void*>, bool, PairHash> memo_;
};

bool literal_embedded(Embedder& e, const Literal& s, const Literal& t) {
  if (s.negative != t.negative || s.sig() != t.sig()) return false;
  return e.args_pairwise(s.atom, t.atom);
}

// s[i..] and t[j..] denote right-nested suffixes; a one-element suffix is the
// literal itself.
bool conj_embedded(Embedder& e, const Conjunction& s, std::size_t i, const Conjunction& t,
                   std::size_t j) {
  bool s_leaf = i + 1 == s.size();
  bool t_leaf = j + 1 == t.size();
  if (t_leaf) return s_leaf && literal_embedded(e, s[i], t[j]);
  if (s_leaf && literal_embedded(e, s[i], t[j])) return true;
  if (conj_embedded(e, s, i, t, j + 1)) return true;
  return !s_leaf && literal_embedded(e, s[i], t[j]) && conj_embedded(e, s, i + 1, t, j + 1);
}

}  // namespace

bool embedded(const Term& s, const Term& t, FunctorClass fc) {
  Embedder e(fc);
  return e.term(s, t);
}

bool embedded(const Literal& s, const Literal& t, FunctorClass fc) {
  Embedder e(fc);
  return literal_embedded(e, s, t);
}

bool embedded(const Conjunction& s, const Conjunction& t, FunctorClass fc) {
  if (s.empty() || t.empty()) return s.empty() && t.empty();
  Embedder e(fc);
  return conj_embedded(e, s, 0, t, 0);
}

bool strictly_embedded(const Term& s, const Term& t, FunctorClass fc) {
  return embedded(s, t, fc) && !embedded(t, s, fc);
}

bool strictly_embedded(const Literal& s, const Literal& t, FunctorClass fc) {
  return embedded(s, t, fc) && !embedded(t, s, fc);
}

bool strictly_embedded(const Conjunction& s, const Conjunction& t, FunctorClass fc) {
  return embedded(s, t, fc) && !embedded(t, s, fc);
}

// ------------------------------------------------------------------- wfo

std::vector<std::size_t> WfoConfig::positions(const Sig& pred) const {
  auto it = pos_.find(pred);
  if (it != pos_.end()) return it->second;
  std::vector<std::size_t> all(pred.arity);
  for (std::size_t i = 0; i < pred.arity; ++i) all[i] = i + 1;
  return all;
}

std::size_t WfoConfig::weight(const Literal& l) const {
  std::size_t w = 0;
  for (std::size_t p : positions(l.sig())) w += termsize(l.atom.arg(p - 1));
  return w;
}

bool WfoConfig::decreasing(const std::vector<Literal>& seq) const {
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (weight(seq[i]) >= weight(seq[i - 1])) return false;
  return true;
}

namespace {

// Visits k-subsets of `from` in lexicographic order until `f` returns true.
template <class F>
bool each_subset(const std::vector<std::size_t>& from, std::size_t k, std::vector<std::size_t>& cur,
                 std::size_t start, F& f) {
  if (cur.size() == k) return f(cur);
  for (std::size_t i = start; i + (k - cur.size()) <= from.size(); ++i) {
    cur.push_back(from[i]);
    if (each_subset(from, k, cur, i + 1, f)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

std::optional<WfoConfig> refine_wfo(const std::vector<Literal>& seq, const WfoConfig& cfg) {
  if (seq.size() <= 1 || cfg.decreasing(seq)) return cfg;
  Sig pred = seq.front().sig();
  auto current = cfg.positions(pred);
  if (current.size() < 2) return std::nullopt;
  std::optional<WfoConfig> found;
  for (std::size_t k = current.size() - 1; k >= 1 && !found && !current.empty(); --k) {
    std::vector<std::size_t> cur;
    auto attempt = [&](const std::vector<std::size_t>& subset) {
      WfoConfig trial = cfg;
      trial.set_positions(pred, subset);
      if (!trial.decreasing(seq)) return false;
      found = trial;
      return true;
    };
    each_subset(current, k, cur, 0, attempt);
  }
  return found;
}

bool admissible_extension(const std::vector<Literal>& seq, const Literal& cand, const OrderKind& kind,
                          FunctorClass fc) {
  if (seq.empty()) return true;
  if (kind.type == OrderType::termsize_wfo) return kind.wfo.weight(cand) < kind.wfo.weight(seq.back());
  for (const auto& e : seq)
    if (embedded(e, cand, fc)) return false;
  return true;
}

bool admissible(const std::vector<Literal>& seq, const OrderKind& kind, FunctorClass fc) {
  if (kind.type == OrderType::termsize_wfo) return kind.wfo.decreasing(seq);
  for (std::size_t j = 1; j < seq.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (embedded(seq[i], seq[j], fc)) return false;
  return true;
}

}  // namespace pd
