#include "pd/syntax.hpp"

#include <cctype>
#include <sstream>

namespace pd {

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

bool is_builtin(const Sig& s) {
  static const std::set<Sig> builtins = {{"=", 2}, {"\\=", 2}, {"=..", 2},
                                         {"call", 1}, {"true", 0}, {"fail", 0}};
  return builtins.count(s) != 0;
}

namespace {

enum class Tok { var, atom, qatom, num, punct, end, eof };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      int l = line_, c = col_;
      if (i_ >= s_.size()) {
        out.push_back({Tok::eof, "", l, c});
        return out;
      }
      char ch = s_[i_];
      if (std::isupper(static_cast<unsigned char>(ch)) || ch == '_') {
        out.push_back({Tok::var, ident(), l, c});
      } else if (std::islower(static_cast<unsigned char>(ch))) {
        out.push_back({Tok::atom, ident(), l, c});
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string n;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) n += get();
        out.push_back({Tok::num, n, l, c});
      } else if (ch == '\'') {
        out.push_back({Tok::qatom, quoted(), l, c});
      } else if (ch == '.') {
        get();
        if (i_ >= s_.size() || std::isspace(static_cast<unsigned char>(s_[i_])) || s_[i_] == '%')
          out.push_back({Tok::end, ".", l, c});
        else
          throw ParseError(l, c, "unexpected '.'");
      } else if (std::string("()[]|,").find(ch) != std::string::npos) {
        out.push_back({Tok::punct, std::string(1, get()), l, c});
      } else if (ch == ':' && peek(1) == '-') {
        get(), get();
        out.push_back({Tok::punct, ":-", l, c});
      } else if (ch == '\\' && peek(1) == '+') {
        get(), get();
        out.push_back({Tok::punct, "\\+", l, c});
      } else if (ch == '\\' && peek(1) == '=') {
        get(), get();
        out.push_back({Tok::punct, "\\=", l, c});
      } else if (ch == '=' && peek(1) == '.' && peek(2) == '.') {
        get(), get(), get();
        out.push_back({Tok::punct, "=..", l, c});
      } else if (ch == '=') {
        get();
        out.push_back({Tok::punct, "=", l, c});
      } else if (ch == '/') {
        get();
        out.push_back({Tok::punct, "/", l, c});
      } else {
        throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
      }
    }
  }

 private:
  char peek(std::size_t k) const { return i_ + k < s_.size() ? s_[i_ + k] : '\0'; }

  char get() {
    char ch = s_[i_++];
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return ch;
  }

  void skip_space() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        get();
      } else if (s_[i_] == '%') {
        while (i_ < s_.size() && s_[i_] != '\n') get();
      } else {
        break;
      }
    }
  }

  std::string ident() {
    std::string r;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
      r += get();
    return r;
  }

  std::string quoted() {
    int l = line_, c = col_;
    get();
    std::string r;
    for (;;) {
      if (i_ >= s_.size()) throw ParseError(l, c, "unterminated quoted atom");
      char ch = get();
      if (ch == '\'') {
        if (peek(0) == '\'') {
          r += get();
          continue;
        }
        return r;
      }
      if (ch == '\\' && i_ < s_.size()) ch = get();
      r += ch;
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  Program program() {
    Program p;
    while (cur().kind != Tok::eof) {
      if (is_punct(":-")) {
        directive(p);
        continue;
      }
      scope_.clear();
      Clause c;
      c.id = static_cast<int>(p.clauses.size()) + 1;
      const Token& at = cur();
      if (is_punct("\\+")) throw ParseError(at.line, at.col, "negative literal in clause head");
      Term head = expr();
      if (head.is_var() || is_number(head))
        throw ParseError(at.line, at.col, "clause head must be an atom");
      if (head.arity() == 1 && head.functor() == "not")
        throw ParseError(at.line, at.col, "negative literal in clause head");
      if (is_builtin(head.sig()))
        throw ParseError(at.line, at.col, "cannot redefine built-in " + head.sig().str());
      check_arity(head.sig(), at);
      c.head = head;
      if (is_punct(":-")) {
        advance();
        c.body = body();
      }
      expect_end();
      p.clauses.push_back(std::move(c));
    }
    for (const auto& c : p.clauses) {
      p.register_functors(c.head);
      p.register_functors(c.body);
    }
    p.reindex();
    return p;
  }

  Conjunction goal() {
    Conjunction c = body();
    if (cur().kind == Tok::end) advance();
    if (cur().kind != Tok::eof) fail_here("unexpected trailing input");
    return c;
  }

  Term single_term() {
    Term t = expr();
    if (cur().kind == Tok::end) advance();
    if (cur().kind != Tok::eof) fail_here("unexpected trailing input");
    return t;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  void advance() {
    if (cur().kind != Tok::eof) ++pos_;
  }
  bool is_punct(const char* p) const { return cur().kind == Tok::punct && cur().text == p; }
  [[noreturn]] void fail_here(const std::string& msg) const {
    std::string what = cur().kind == Tok::eof ? "end of input" : "'" + cur().text + "'";
    throw ParseError(cur().line, cur().col, msg + " near " + what);
  }
  void expect(const char* p) {
    if (!is_punct(p)) fail_here(std::string("expected '") + p + "'");
    advance();
  }
  void expect_end() {
    if (cur().kind != Tok::end) fail_here("expected '.'");
    advance();
  }
  static bool is_number(const Term& t) {
    return t.is_constant() && !t.functor().empty() &&
           std::isdigit(static_cast<unsigned char>(t.functor()[0]));
  }

  void check_arity(const Sig& s, const Token& at) {
    if (is_builtin(s)) return;
    auto [it, fresh] = arity_.emplace(s.name, s.arity);
    if (!fresh && it->second != s.arity)
      throw ParseError(at.line, at.col,
                       "arity clash for " + s.name + ": used with arity " +
                           std::to_string(it->second) + " and " + std::to_string(s.arity));
  }

  void directive(Program& p) {
    advance();
    if (!(cur().kind == Tok::atom && cur().text == "open")) fail_here("unknown directive");
    advance();
    expect("(");
    for (;;) {
      const Token& at = cur();
      if (cur().kind != Tok::atom && cur().kind != Tok::qatom) fail_here("expected predicate name");
      std::string name = cur().text;
      advance();
      expect("/");
      if (cur().kind != Tok::num) fail_here("expected arity");
      Sig s{name, static_cast<std::size_t>(std::stoul(cur().text))};
      advance();
      check_arity(s, at);
      p.open_preds.insert(s);
      if (is_punct(",")) {
        advance();
        continue;
      }
      break;
    }
    expect(")");
    expect_end();
  }

  Conjunction body() {
    Conjunction c;
    c.push_back(literal());
    while (is_punct(",")) {
      advance();
      c.push_back(literal());
    }
    return c;
  }

  Literal literal() {
    const Token& at = cur();
    bool negative = false;
    if (is_punct("\\+")) {
      advance();
      negative = true;
    }
    Term t = expr();
    if (!negative && !t.is_var() && t.arity() == 1 && t.functor() == "not") {
      negative = true;
      t = t.arg(0);
    }
    if (t.is_var()) throw ParseError(at.line, at.col, "variable used as a goal; wrap it in call/1");
    if (is_number(t)) throw ParseError(at.line, at.col, "number used as a goal");
    check_arity(t.sig(), at);
    return Literal{negative, t};
  }

  Term expr() {
    Term lhs = primary();
    for (const char* op : {"=", "\\=", "=.."}) {
      if (is_punct(op)) {
        advance();
        Term rhs = primary();
        return Term::make(op, {lhs, rhs});
      }
    }
    return lhs;
  }

  Term primary() {
    const Token t = cur();
    switch (t.kind) {
      case Tok::var: {
        advance();
        if (t.text == "_") return Term::variable("_" + std::to_string(++anon_));
        auto it = scope_.find(t.text);
        if (it != scope_.end()) return it->second;
        Term v = Term::variable(t.text);
        scope_.emplace(t.text, v);
        return v;
      }
      case Tok::num:
        advance();
        return Term::make(t.text);
      case Tok::atom:
      case Tok::qatom: {
        advance();
        if (is_punct("(")) {
          advance();
          std::vector<Term> args{expr()};
          while (is_punct(",")) {
            advance();
            args.push_back(expr());
          }
          expect(")");
          return Term::make(t.text, std::move(args));
        }
        return Term::make(t.text);
      }
      case Tok::punct:
        if (t.text == "[") return list();
        if (t.text == "(") {
          advance();
          Term inner = expr();
          expect(")");
          return inner;
        }
        break;
      default:
        break;
    }
    fail_here("expected a term");
  }

  Term list() {
    expect("[");
    if (is_punct("]")) {
      advance();
      return Term::nil();
    }
    std::vector<Term> items{expr()};
    while (is_punct(",")) {
      advance();
      items.push_back(expr());
    }
    std::optional<Term> tail;
    if (is_punct("|")) {
      advance();
      tail = expr();
    }
    expect("]");
    return Term::list(items, tail);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, Term> scope_;
  std::map<std::string, std::size_t> arity_;
  int anon_ = 0;
};

bool plain_atom(const std::string& s) {
  if (s == "[]") return true;
  if (s.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(s[0]))) {
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }
  if (!std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string atom_text(const std::string& s) {
  if (plain_atom(s)) return s;
  std::string r = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') r += '\\';
    r += c;
  }
  return r + "'";
}

bool is_infix(const Term& t) {
  return !t.is_var() && t.arity() == 2 &&
         (t.functor() == "=" || t.functor() == "\\=" || t.functor() == "=..");
}

template <class NameFn>
void write_term(std::ostringstream& os, const Term& t, NameFn& name) {
  if (t.is_var()) {
    os << name(t.var());
    return;
  }
  if (t.is_cons()) {
    os << '[';
    write_term(os, t.arg(0), name);
    Term rest = t.arg(1);
    while (rest.is_cons()) {
      os << ',';
      write_term(os, rest.arg(0), name);
      rest = rest.arg(1);
    }
    if (!rest.is_nil()) {
      os << '|';
      write_term(os, rest, name);
    }
    os << ']';
    return;
  }
  if (is_infix(t)) {
    write_term(os, t.arg(0), name);
    os << ' ' << t.functor() << ' ';
    write_term(os, t.arg(1), name);
    return;
  }
  os << atom_text(t.functor());
  if (t.arity() == 0) return;
  os << '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) os << ',';
    if (is_infix(t.arg(i))) {
      os << '(';
      write_term(os, t.arg(i), name);
      os << ')';
    } else {
      write_term(os, t.arg(i), name);
    }
  }
  os << ')';
}

template <class NameFn>
void write_literal(std::ostringstream& os, const Literal& l, NameFn& name) {
  if (l.negative) os << "\\+ ";
  write_term(os, l.atom, name);
}

template <class NameFn>
void write_conj(std::ostringstream& os, const Conjunction& c, NameFn& name) {
  if (c.empty()) {
    os << "true";
    return;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ", ";
    write_literal(os, c[i], name);
  }
}

struct RawName {
  std::string operator()(const Var& v) const {
    return v.index ? v.name + "_" + std::to_string(v.index) : v.name;
  }
};

struct NamerRef {
  VarNamer& n;
  const std::string& operator()(const Var& v) const { return n.name(v); }
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }
Conjunction parse_goal(std::string_view text) { return Parser(text).goal(); }
Term parse_term(std::string_view text) { return Parser(text).single_term(); }

const std::string& VarNamer::name(const Var& v) {
  auto it = names_.find(v);
  if (it != names_.end()) return it->second;
  std::string base = v.name.empty() ? "V" : v.name;
  std::string cand = base;
  for (int k = 1; used_.count(cand); ++k) cand = base + std::to_string(k);
  used_.insert(cand);
  return names_.emplace(v, cand).first->second;
}

std::string to_string(const Term& t) {
  std::ostringstream os;
  RawName n;
  write_term(os, t, n);
  return os.str();
}

std::string to_string(const Literal& l) {
  std::ostringstream os;
  RawName n;
  write_literal(os, l, n);
  return os.str();
}

std::string to_string(const Conjunction& c) {
  std::ostringstream os;
  RawName n;
  write_conj(os, c, n);
  return os.str();
}

std::string to_string(const Clause& c) {
  std::ostringstream os;
  RawName n;
  write_term(os, c.head, n);
  if (!c.body.empty()) {
    os << " :- ";
    write_conj(os, c.body, n);
  }
  os << '.';
  return os.str();
}

std::string to_string(const Substitution& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  RawName n;
  for (const auto& [v, t] : s.bindings()) {
    if (!first) os << ", ";
    first = false;
    os << n(v) << '/';
    write_term(os, t, n);
  }
  os << '}';
  return os.str();
}

std::string to_string(const Term& t, VarNamer& n) {
  std::ostringstream os;
  NamerRef r{n};
  write_term(os, t, r);
  return os.str();
}

std::string to_string(const Literal& l, VarNamer& n) {
  std::ostringstream os;
  NamerRef r{n};
  write_literal(os, l, r);
  return os.str();
}

std::string to_string(const Conjunction& c, VarNamer& n) {
  std::ostringstream os;
  NamerRef r{n};
  write_conj(os, c, r);
  return os.str();
}

std::string pretty(const Clause& c) {
  VarNamer n;
  std::ostringstream os;
  NamerRef r{n};
  write_term(os, c.head, r);
  if (!c.body.empty()) {
    os << " :- ";
    write_conj(os, c.body, r);
  }
  os << '.';
  return os.str();
}

std::string pretty(const Program& p) {
  std::string out;
  for (const auto& s : p.open_preds) out += ":- open(" + atom_text(s.name) + "/" + std::to_string(s.arity) + ").\n";
  for (const auto& c : p.clauses) out += pretty(c) + "\n";
  return out;
}

}  // namespace pd
