#pragma once

// Recursive-descent parser for formula documents:
//   doc    := {flipdecl} formula
//   formula:= quant | binary
//   quant  := ("exists"|"forall") IDENT "." formula
//           | ("existsSet"|"forallSet") IDENT ":" NAT "." formula
//   binary := implic ;  implic := disj ["->" implic]
//   disj   := conj {"\/" conj} ;  conj := neg {"/\" neg}
//   neg    := "~" neg | atom
//   atom   := "(" formula ")" | "E(" v "," v ")" | v "=" v | IDENT "(" v ")"
//           | v "in" IDENT | "conn(" v "," v ";" [vlist] ")"
//           | ("flipconn"|"flipreach") "<" IDENT ">" "(" v "," v ";" [vlist] ")"
//   flipdecl := "flip" IDENT "k" "=" NAT ["symmetric"] "{" {pairline} "}"
//   pairline := "(" fields ")" "~" "(" fields ")" ";"
//   fields   := "eq" "=" PATTERN "," "adj" "=" PATTERN ["," "color" "=" constraints]
// PATTERN is a string over {0,1,*} of length k; constraints are +Name/-Name
// separated by commas. Precedence: ~ binds tightest, then /\, then \/, then
// -> (right-associative). Quantifiers appear as binary operands only inside
// parentheses; their scope extends maximally to the right. Comments run
// from '#' to end of line. Only syntax errors are raised here; semantic
// checks live in validate.hpp.

#include <cctype>
#include <string>
#include <vector>

#include "lrmso/errors.hpp"
#include "lrmso/flip.hpp"
#include "lrmso/logic/ast.hpp"

namespace lrmso::logic {

namespace detail {

struct Token {
  enum class Type { Ident, Nat, Sym, End };
  Type type = Type::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string text) : text_(std::move(text)) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(line_, col_, msg);
  }

  int cur() const {
    return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
  }

  void bump() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void advance() {
    while (true) {
      while (std::isspace(cur())) bump();
      if (cur() == '#') {
        while (cur() != -1 && cur() != '\n') bump();
        continue;
      }
      break;
    }
    tok_ = Token{Token::Type::End, "", line_, col_};
    int c = cur();
    if (c == -1) return;
    if (std::isalpha(c) || c == '_') {
      std::string s;
      while (std::isalnum(cur()) || cur() == '_') {
        s += static_cast<char>(cur());
        bump();
      }
      tok_.type = Token::Type::Ident;
      tok_.text = s;
      return;
    }
    if (std::isdigit(c)) {
      std::string s;
      while (std::isdigit(cur())) {
        s += static_cast<char>(cur());
        bump();
      }
      tok_.type = Token::Type::Nat;
      tok_.text = s;
      return;
    }
    tok_.type = Token::Type::Sym;
    switch (c) {
      case '/':
        bump();
        if (cur() != '\\') fail("expected '\\' after '/'");
        bump();
        tok_.text = "/\\";
        return;
      case '\\':
        bump();
        if (cur() != '/') fail("expected '/' after '\\'");
        bump();
        tok_.text = "\\/";
        return;
      case '-':
        bump();
        if (cur() == '>') {
          bump();
          tok_.text = "->";
        } else {
          tok_.text = "-";
        }
        return;
      case '(':
      case ')':
      case '{':
      case '}':
      case '<':
      case '>':
      case ',':
      case ';':
      case '.':
      case ':':
      case '=':
      case '~':
      case '*':
      case '+':
        bump();
        tok_.text = std::string(1, static_cast<char>(c));
        return;
      default:
        fail(std::string("unexpected character '") + static_cast<char>(c) +
             "'");
    }
  }

  std::string text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

inline bool is_reserved(const std::string& s) {
  return s == "exists" || s == "forall" || s == "existsSet" ||
         s == "forallSet" || s == "in" || s == "conn" || s == "flipconn" ||
         s == "flipreach" || s == "E" || s == "flip";
}

class Parser {
 public:
  explicit Parser(std::string text) : lex_(std::move(text)) {}

  FormulaDocument parse_document() {
    FormulaDocument doc;
    while (at_ident("flip")) doc.specs.push_back(parse_flipdecl(doc));
    doc.root = parse_formula();
    expect_end();
    return doc;
  }

  // Declarations only — used by CLI commands that take a spec table file.
  std::vector<FlipSpec> parse_flipspecs() {
    FormulaDocument doc;
    while (at_ident("flip")) doc.specs.push_back(parse_flipdecl(doc));
    expect_end();
    return doc.specs;
  }

 private:
  [[noreturn]] void fail(const detail::Token& t, const std::string& msg) {
    throw SyntaxError(t.line, t.col, msg);
  }

  bool at_ident(const std::string& s) {
    return lex_.peek().type == Token::Type::Ident && lex_.peek().text == s;
  }

  bool at_sym(const std::string& s) {
    return lex_.peek().type == Token::Type::Sym && lex_.peek().text == s;
  }

  Token expect_sym(const std::string& s) {
    if (!at_sym(s)) fail(lex_.peek(), "expected '" + s + "'");
    return lex_.take();
  }

  Token expect_ident_kw(const std::string& s) {
    if (!at_ident(s)) fail(lex_.peek(), "expected '" + s + "'");
    return lex_.take();
  }

  std::string expect_name(const char* what) {
    if (lex_.peek().type != Token::Type::Ident)
      fail(lex_.peek(), std::string("expected ") + what);
    if (is_reserved(lex_.peek().text))
      fail(lex_.peek(), "reserved word '" + lex_.peek().text +
                            "' cannot be used as " + what);
    return lex_.take().text;
  }

  int expect_nat() {
    if (lex_.peek().type != Token::Type::Nat)
      fail(lex_.peek(), "expected a number");
    Token t = lex_.take();
    long long v = 0;
    for (char ch : t.text) {
      v = v * 10 + (ch - '0');
      if (v > 1000000000LL) fail(t, "number too large");
    }
    return static_cast<int>(v);
  }

  void expect_end() {
    if (lex_.peek().type != Token::Type::End)
      fail(lex_.peek(), "unexpected trailing input");
  }

  // ---- flip declarations ----

  std::string parse_pattern(int k) {
    // Patterns are lexed as runs of digits and '*'s; reassemble and check.
    std::string pat;
    while (true) {
      if (lex_.peek().type == Token::Type::Nat) {
        pat += lex_.take().text;
      } else if (at_sym("*")) {
        lex_.take();
        pat += '*';
      } else {
        break;
      }
    }
    if (static_cast<int>(pat.size()) != k)
      fail(lex_.peek(), "pattern must have exactly " + std::to_string(k) +
                            " symbols from {0,1,*}");
    for (char ch : pat)
      if (ch != '0' && ch != '1' && ch != '*')
        fail(lex_.peek(), "pattern symbols must be 0, 1 or *");
    return pat;
  }

  TypePattern parse_pattern_group(int k) {
    TypePattern p;
    expect_sym("(");
    expect_ident_kw("eq");
    expect_sym("=");
    std::string eq = parse_pattern(k);
    expect_sym(",");
    expect_ident_kw("adj");
    expect_sym("=");
    std::string adj = parse_pattern(k);
    for (int i = 0; i < k; ++i) {
      if (eq[i] != '*') {
        p.eq_care |= std::uint64_t{1} << i;
        if (eq[i] == '1') p.eq_val |= std::uint64_t{1} << i;
      }
      if (adj[i] != '*') {
        p.adj_care |= std::uint64_t{1} << i;
        if (adj[i] == '1') p.adj_val |= std::uint64_t{1} << i;
      }
    }
    if (at_sym(",")) {
      lex_.take();
      expect_ident_kw("color");
      expect_sym("=");
      while (true) {
        bool want;
        if (at_sym("+")) {
          want = true;
        } else if (at_sym("-")) {
          want = false;
        } else {
          fail(lex_.peek(), "expected '+' or '-' before a color name");
        }
        lex_.take();
        p.color_req.emplace_back(expect_name("a color name"), want);
        if (at_sym(","))
          lex_.take();
        else
          break;
      }
    }
    expect_sym(")");
    return p;
  }

  FlipSpec parse_flipdecl(const FormulaDocument& doc) {
    Token kw = expect_ident_kw("flip");
    FlipSpec spec;
    spec.name = expect_name("a flip spec name");
    if (doc.find_spec(spec.name))
      fail(kw, "duplicate flip spec '" + spec.name + "'");
    expect_ident_kw("k");
    expect_sym("=");
    spec.k = expect_nat();
    if (spec.k > kMaxFlipArity) fail(kw, "flip arity exceeds 64");
    if (at_ident("symmetric")) {
      lex_.take();
      spec.symmetric = true;
    }
    expect_sym("{");
    while (!at_sym("}")) {
      TypePattern left = parse_pattern_group(spec.k);
      expect_sym("~");
      TypePattern right = parse_pattern_group(spec.k);
      expect_sym(";");
      spec.pairs.emplace_back(std::move(left), std::move(right));
    }
    expect_sym("}");
    return spec;
  }

  // ---- formulas ----

  SourcePos pos_of(const Token& t) { return {t.line, t.col}; }

  FormulaPtr parse_formula() {
    if (at_ident("exists") || at_ident("forall") || at_ident("existsSet") ||
        at_ident("forallSet")) {
      Token kw = lex_.take();
      bool set_quant = kw.text == "existsSet" || kw.text == "forallSet";
      bool exists = kw.text == "exists" || kw.text == "existsSet";
      auto f = make(set_quant ? (exists ? Kind::ExistsSet : Kind::ForallSet)
                              : (exists ? Kind::ExistsVertex
                                        : Kind::ForallVertex),
                    pos_of(kw));
      f->name = expect_name("a variable name");
      if (set_quant) {
        expect_sym(":");
        f->rank = expect_nat();
      }
      expect_sym(".");
      f->children.push_back(parse_formula());
      return f;
    }
    return parse_implic();
  }

  FormulaPtr parse_implic() {
    FormulaPtr lhs = parse_disj();
    if (at_sym("->")) {
      Token t = lex_.take();
      auto f = make(Kind::Implies, pos_of(t));
      f->children.push_back(lhs);
      f->children.push_back(parse_implic());  // right-associative
      return f;
    }
    return lhs;
  }

  FormulaPtr parse_disj() {
    FormulaPtr lhs = parse_conj();
    while (at_sym("\\/")) {
      Token t = lex_.take();
      auto f = make(Kind::Or, pos_of(t));
      f->children.push_back(lhs);
      f->children.push_back(parse_conj());
      lhs = f;
    }
    return lhs;
  }

  FormulaPtr parse_conj() {
    FormulaPtr lhs = parse_neg();
    while (at_sym("/\\")) {
      Token t = lex_.take();
      auto f = make(Kind::And, pos_of(t));
      f->children.push_back(lhs);
      f->children.push_back(parse_neg());
      lhs = f;
    }
    return lhs;
  }

  FormulaPtr parse_neg() {
    if (at_sym("~")) {
      Token t = lex_.take();
      auto f = make(Kind::Not, pos_of(t));
      f->children.push_back(parse_neg());
      return f;
    }
    return parse_atom();
  }

  std::vector<std::string> parse_vlist_until_rparen() {
    std::vector<std::string> vs;
    if (!at_sym(")")) {
      vs.push_back(expect_name("a vertex variable"));
      while (at_sym(",")) {
        lex_.take();
        vs.push_back(expect_name("a vertex variable"));
      }
    }
    return vs;
  }

  FormulaPtr parse_atom() {
    const Token t = lex_.peek();
    if (at_sym("(")) {
      lex_.take();
      FormulaPtr f = parse_formula();
      expect_sym(")");
      return f;
    }
    if (t.type != Token::Type::Ident)
      fail(t, "expected an atom or a parenthesized formula");

    if (t.text == "E") {
      lex_.take();
      auto f = make(Kind::Edge, pos_of(t));
      expect_sym("(");
      f->args.push_back(expect_name("a vertex variable"));
      expect_sym(",");
      f->args.push_back(expect_name("a vertex variable"));
      expect_sym(")");
      return f;
    }
    if (t.text == "conn") {
      lex_.take();
      auto f = make(Kind::Conn, pos_of(t));
      expect_sym("(");
      f->args.push_back(expect_name("a vertex variable"));
      expect_sym(",");
      f->args.push_back(expect_name("a vertex variable"));
      expect_sym(";");
      for (auto& v : parse_vlist_until_rparen()) f->args.push_back(std::move(v));
      expect_sym(")");
      return f;
    }
    if (t.text == "flipconn" || t.text == "flipreach") {
      lex_.take();
      auto f = make(t.text == "flipconn" ? Kind::FlipConn : Kind::FlipReach,
                    pos_of(t));
      expect_sym("<");
      f->name = expect_name("a flip spec name");
      expect_sym(">");
      expect_sym("(");
      f->args.push_back(expect_name("a vertex variable"));
      expect_sym(",");
      f->args.push_back(expect_name("a vertex variable"));
      expect_sym(";");
      for (auto& v : parse_vlist_until_rparen()) f->args.push_back(std::move(v));
      expect_sym(")");
      return f;
    }
    if (is_reserved(t.text))
      fail(t, "'" + t.text + "' cannot start an atom here (quantifiers must "
                             "be parenthesized in operand position)");

    std::string first = lex_.take().text;
    if (at_sym("(")) {  // color atom: IDENT "(" v ")"
      lex_.take();
      auto f = make(Kind::Color, pos_of(t));
      f->name = first;
      f->args.push_back(expect_name("a vertex variable"));
      expect_sym(")");
      return f;
    }
    if (at_sym("=")) {  // v "=" v
      lex_.take();
      auto f = make(Kind::Eq, pos_of(t));
      f->args.push_back(first);
      f->args.push_back(expect_name("a vertex variable"));
      return f;
    }
    if (at_ident("in")) {  // v "in" IDENT
      lex_.take();
      auto f = make(Kind::In, pos_of(t));
      f->args.push_back(first);
      f->name = expect_name("a set variable name");
      return f;
    }
    fail(t, "expected '(', '=' or 'in' after identifier '" + first + "'");
  }

  Lexer lex_;
};

}  // namespace detail

inline FormulaDocument parse_document(const std::string& text) {
  detail::Parser p(text);
  return p.parse_document();
}

inline std::vector<FlipSpec> parse_flipspecs(const std::string& text) {
  detail::Parser p(text);
  return p.parse_flipspecs();
}

}  // namespace lrmso::logic
