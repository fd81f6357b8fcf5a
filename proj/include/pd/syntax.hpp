#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pd/terms.hpp"

namespace pd {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Program parse_program(std::string_view text);
// A goal is a comma-separated body; a trailing '.' is optional.
Conjunction parse_goal(std::string_view text);
Term parse_term(std::string_view text);

bool is_builtin(const Sig& s);

// Printing. Variables print as their name, with the index appended when it
// is nonzero. The clause/program printers instead choose names that are
// unique within each clause so the output re-parses to a variant.
std::string to_string(const Term& t);
std::string to_string(const Literal& l);
std::string to_string(const Conjunction& c);
std::string to_string(const Clause& c);
std::string to_string(const Substitution& s);

class VarNamer {
 public:
  const std::string& name(const Var& v);

 private:
  std::map<Var, std::string> names_;
  std::set<std::string> used_;
};

std::string to_string(const Term& t, VarNamer& n);
std::string to_string(const Literal& l, VarNamer& n);
std::string to_string(const Conjunction& c, VarNamer& n);
std::string pretty(const Clause& c);
std::string pretty(const Program& p);

}  // namespace pd
