#pragma once

// Canonical pretty-printer. Binary connectives are always parenthesized, so
// re-parsing printed output reproduces the AST exactly (positions aside).

#include <string>

#include "lrmso/flip.hpp"
#include "lrmso/logic/ast.hpp"

namespace lrmso::logic {

namespace detail {

inline std::string pattern_str(std::uint64_t care, std::uint64_t val, int k) {
  std::string s;
  for (int i = 0; i < k; ++i) {
    if (!(care & (std::uint64_t{1} << i)))
      s += '*';
    else
      s += (val & (std::uint64_t{1} << i)) ? '1' : '0';
  }
  return s;
}

inline std::string group_str(const TypePattern& p, int k) {
  std::string s = "(eq=" + pattern_str(p.eq_care, p.eq_val, k) +
                  ", adj=" + pattern_str(p.adj_care, p.adj_val, k);
  if (!p.color_req.empty()) {
    s += ", color=";
    for (std::size_t i = 0; i < p.color_req.size(); ++i) {
      if (i) s += ",";
      s += (p.color_req[i].second ? "+" : "-") + p.color_req[i].first;
    }
  }
  return s + ")";
}

inline std::string join_args(const std::vector<std::string>& args,
                             std::size_t from) {
  std::string s;
  for (std::size_t i = from; i < args.size(); ++i) {
    if (i > from) s += ",";
    s += args[i];
  }
  return s;
}

inline bool is_quantifier(Kind k) {
  return k == Kind::ExistsVertex || k == Kind::ForallVertex ||
         k == Kind::ExistsSet || k == Kind::ForallSet;
}

}  // namespace detail

inline std::string print_flipspec(const FlipSpec& spec) {
  std::string s = "flip " + spec.name + " k=" + std::to_string(spec.k);
  if (spec.symmetric) s += " symmetric";
  s += " {";
  for (const auto& [l, r] : spec.pairs)
    s += " " + detail::group_str(l, spec.k) + " ~ " +
         detail::group_str(r, spec.k) + ";";
  return s + " }";
}

inline std::string print_formula(const Formula& f) {
  switch (f.kind) {
    case Kind::ExistsVertex:
      return "exists " + f.name + " . " + print_formula(*f.children[0]);
    case Kind::ForallVertex:
      return "forall " + f.name + " . " + print_formula(*f.children[0]);
    case Kind::ExistsSet:
      return "existsSet " + f.name + " : " + std::to_string(f.rank) + " . " +
             print_formula(*f.children[0]);
    case Kind::ForallSet:
      return "forallSet " + f.name + " : " + std::to_string(f.rank) + " . " +
             print_formula(*f.children[0]);
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      // Quantified operands must be re-wrapped: in operand position the
      // grammar only admits them parenthesized.
      auto operand = [](const Formula& c) {
        return detail::is_quantifier(c.kind) ? "(" + print_formula(c) + ")"
                                             : print_formula(c);
      };
      const char* op = f.kind == Kind::And   ? " /\\ "
                       : f.kind == Kind::Or ? " \\/ "
                                            : " -> ";
      return "(" + operand(*f.children[0]) + op + operand(*f.children[1]) +
             ")";
    }
    case Kind::Not: {
      const Formula& c = *f.children[0];
      return detail::is_quantifier(c.kind) ? "~(" + print_formula(c) + ")"
                                           : "~" + print_formula(c);
    }
    case Kind::Edge:
      return "E(" + f.args[0] + "," + f.args[1] + ")";
    case Kind::Eq:
      return f.args[0] + " = " + f.args[1];
    case Kind::Color:
      return f.name + "(" + f.args[0] + ")";
    case Kind::In:
      return f.args[0] + " in " + f.name;
    case Kind::Conn:
      return "conn(" + f.args[0] + "," + f.args[1] + "; " +
             detail::join_args(f.args, 2) + ")";
    case Kind::FlipConn:
      return "flipconn<" + f.name + ">(" + f.args[0] + "," + f.args[1] +
             "; " + detail::join_args(f.args, 2) + ")";
    case Kind::FlipReach:
      return "flipreach<" + f.name + ">(" + f.args[0] + "," + f.args[1] +
             "; " + detail::join_args(f.args, 2) + ")";
  }
  return "";
}

inline std::string print_document(const FormulaDocument& doc) {
  std::string s;
  for (const auto& spec : doc.specs) s += print_flipspec(spec) + "\n";
  return s + print_formula(*doc.root) + "\n";
}

}  // namespace lrmso::logic
