#pragma once

// Formula AST for the logic family: first-order quantification over
// vertices, rank-bounded set quantification, boolean connectives, and the
// atoms E(x,y), x = y, Color(x), x in X, conn(s,t; avoid),
// flipconn<Spec>(s,t; params), flipreach<Spec>(s,t; params).

#include <memory>
#include <string>
#include <vector>

#include "lrmso/flip.hpp"

namespace lrmso::logic {

struct SourcePos {
  int line = 1;
  int col = 1;
};

enum class Kind {
  ExistsVertex,
  ForallVertex,
  ExistsSet,
  ForallSet,
  And,
  Or,
  Not,
  Implies,
  Edge,
  Eq,
  Color,
  In,
  Conn,
  FlipConn,
  FlipReach,
};

struct Formula {
  Kind kind;
  SourcePos pos;
  std::string name;  // bound variable / color name / set name / spec name
  int rank = 0;      // set quantifiers only
  std::vector<std::shared_ptr<Formula>> children;
  std::vector<std::string> args;  // vertex variables of atoms, in order
};

using FormulaPtr = std::shared_ptr<Formula>;

inline FormulaPtr make(Kind kind, SourcePos pos) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->pos = pos;
  return f;
}

// Structural equality, ignoring source positions.
inline bool equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.name != b.name || a.rank != b.rank ||
      a.args != b.args || a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!equal(*a.children[i], *b.children[i])) return false;
  return true;
}

struct FormulaDocument {
  std::vector<FlipSpec> specs;  // declaration order; names unique
  FormulaPtr root;

  const FlipSpec* find_spec(const std::string& name) const {
    for (const auto& s : specs)
      if (s.name == name) return &s;
    return nullptr;
  }
};

inline bool equal(const FormulaDocument& a, const FormulaDocument& b) {
  return a.specs == b.specs && a.root && b.root && equal(*a.root, *b.root);
}

}  // namespace lrmso::logic
