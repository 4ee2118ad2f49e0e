#pragma once

// Static checks over a parsed document: variable binding, flip spec
// resolution, arity, and the symmetry requirement of flipconn. Diagnostics
// are data (position + machine-readable code); check_document throws the
// first one as an Error.

#include <set>
#include <string>
#include <vector>

#include "lrmso/errors.hpp"
#include "lrmso/logic/ast.hpp"

namespace lrmso::logic {

struct Diagnostic {
  ErrorCode code;
  std::string message;
  SourcePos pos;
};

namespace detail {

struct Validator {
  const FormulaDocument& doc;
  std::vector<Diagnostic> out;

  void vertex_arg(const Formula& f, const std::string& v,
                  const std::set<std::string>& venv) {
    if (!venv.count(v))
      out.push_back({ErrorCode::UnboundVariable,
                     "unbound vertex variable '" + v + "'", f.pos});
  }

  void walk(const Formula& f, std::set<std::string> venv,
            std::set<std::string> senv) {
    switch (f.kind) {
      case Kind::ExistsVertex:
      case Kind::ForallVertex:
        venv.insert(f.name);
        walk(*f.children[0], std::move(venv), std::move(senv));
        return;
      case Kind::ExistsSet:
      case Kind::ForallSet:
        senv.insert(f.name);
        walk(*f.children[0], std::move(venv), std::move(senv));
        return;
      case Kind::And:
      case Kind::Or:
      case Kind::Implies:
        walk(*f.children[0], venv, senv);
        walk(*f.children[1], std::move(venv), std::move(senv));
        return;
      case Kind::Not:
        walk(*f.children[0], std::move(venv), std::move(senv));
        return;
      case Kind::Edge:
      case Kind::Eq:
      case Kind::Conn:
        for (const auto& v : f.args) vertex_arg(f, v, venv);
        return;
      case Kind::Color:
        vertex_arg(f, f.args[0], venv);
        return;
      case Kind::In:
        vertex_arg(f, f.args[0], venv);
        if (!senv.count(f.name))
          out.push_back({ErrorCode::UnboundVariable,
                         "unbound set variable '" + f.name + "'", f.pos});
        return;
      case Kind::FlipConn:
      case Kind::FlipReach: {
        const FlipSpec* spec = doc.find_spec(f.name);
        if (!spec) {
          out.push_back({ErrorCode::UnknownFlipSpec,
                         "unknown flip spec '" + f.name + "'", f.pos});
        } else {
          const int given = static_cast<int>(f.args.size()) - 2;
          if (given != spec->k)
            out.push_back(
                {ErrorCode::ArityMismatch,
                 "flip spec '" + f.name + "' has arity " +
                     std::to_string(spec->k) + " but " +
                     std::to_string(given) + " parameter(s) were given",
                 f.pos});
          if (f.kind == Kind::FlipConn && !spec->symmetric)
            out.push_back({ErrorCode::SymmetryRequired,
                           "flipconn requires the symmetric flip spec '" +
                               f.name + "' to be declared symmetric",
                           f.pos});
        }
        for (const auto& v : f.args) vertex_arg(f, v, venv);
        return;
      }
    }
  }
};

}  // namespace detail

inline std::vector<Diagnostic> validate(
    const FormulaDocument& doc, const std::set<std::string>& free_vertex = {},
    const std::set<std::string>& free_set = {}) {
  detail::Validator v{doc, {}};
  if (doc.root) v.walk(*doc.root, free_vertex, free_set);
  return v.out;
}

inline void check_document(const FormulaDocument& doc,
                           const std::set<std::string>& free_vertex = {},
                           const std::set<std::string>& free_set = {}) {
  auto diags = validate(doc, free_vertex, free_set);
  if (!diags.empty())
    throw Error(diags.front().code,
                "line " + std::to_string(diags.front().pos.line) + ", col " +
                    std::to_string(diags.front().pos.col) + ": " +
                    diags.front().message);
}

}  // namespace lrmso::logic
