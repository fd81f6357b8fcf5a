#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "pd/syntax.hpp"
#include "pd/terms.hpp"

namespace pdtest {

inline std::string corpus_path(const std::string& name) { return std::string(PD_CORPUS_DIR) + "/" + name; }

inline pd::Program corpus(const std::string& name) {
  std::ifstream in(corpus_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  pd::Program p = pd::parse_program(ss.str());
  p.reindex();
  return p;
}

inline pd::Program program(const std::string& text) {
  pd::Program p = pd::parse_program(text);
  p.reindex();
  return p;
}

inline pd::Term T(const std::string& s) { return pd::parse_term(s); }
inline pd::Conjunction G(const std::string& s) { return pd::parse_goal(s); }
inline pd::Literal L(const std::string& s) { return pd::parse_goal(s).at(0); }

// Variant check on printed clauses: both sides re-parse and compare modulo
// variable names, clause order included.
inline bool same_clauses(const std::vector<pd::Clause>& a, const std::vector<pd::Clause>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pd::Conjunction x{pd::pos(a[i].head)}, y{pd::pos(b[i].head)};
    x.insert(x.end(), a[i].body.begin(), a[i].body.end());
    y.insert(y.end(), b[i].body.begin(), b[i].body.end());
    if (a[i].body.size() != b[i].body.size() || !pd::is_variant(x, y)) return false;
  }
  return true;
}

}  // namespace pdtest
