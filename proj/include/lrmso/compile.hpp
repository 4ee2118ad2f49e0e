#pragma once

// Inter-logic compilations. conn_k reduces to flipconn over the spec that
// deletes every edge incident to the parameters: for each position i the
// pattern pair (eq 1 at i) ~ (adj 1 at i), swap-closed; the compiled atom
// additionally conjoins s ≠ aᵢ and t ≠ aᵢ. flipconn reduces to flipreach by
// reinterpreting the same (necessarily symmetric) spec. The duality check
// validates flipreach against its suffix-witness characterization: the
// answer is false exactly when the reachable set of s is a suffix missing t,
// and that witness has cutrank bounded by the number of realized types.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lrmso/errors.hpp"
#include "lrmso/flip.hpp"
#include "lrmso/graph.hpp"
#include "lrmso/logic/ast.hpp"
#include "lrmso/lowrank.hpp"
#include "lrmso/rank.hpp"

namespace lrmso {

inline FlipSpec compile_conn_to_flipconn(int k,
                                         const std::string& name = "conn") {
  if (k < 0 || k > kMaxFlipArity)
    throw Error(ErrorCode::BadParameter, "conn compilation: bad arity");
  FlipSpec spec;
  spec.name = name;
  spec.k = k;
  spec.symmetric = true;
  for (int i = 0; i < k; ++i) {
    TypePattern left, right;
    left.eq_care = std::uint64_t{1} << i;
    left.eq_val = std::uint64_t{1} << i;
    right.adj_care = std::uint64_t{1} << i;
    right.adj_val = std::uint64_t{1} << i;
    spec.pairs.emplace_back(left, right);
  }
  return spec;
}

inline FlipSpec compile_flipconn_to_flipreach(const FlipSpec& spec) {
  if (!spec.symmetric)
    throw Error(ErrorCode::SymmetryRequired,
                "flipconn-to-flipreach requires a symmetric spec");
  return spec;  // identical table, reinterpreted as a reachability flip
}

namespace detail {

inline logic::FormulaPtr clone(const logic::Formula& f) {
  auto c = std::make_shared<logic::Formula>(f);
  for (auto& ch : c->children) ch = clone(*ch);
  return c;
}

inline std::string fresh_spec_name(const logic::FormulaDocument& doc,
                                   const std::string& base) {
  std::string name = base;
  while (doc.find_spec(name)) name += "_";
  return name;
}

}  // namespace detail

// Rewrites every conn atom to the compiled flipconn form, declaring one
// deletion spec per avoid-list arity in use.
inline logic::FormulaDocument rewrite_conn_to_flipconn(
    const logic::FormulaDocument& doc) {
  using logic::Formula;
  using logic::FormulaPtr;
  using logic::Kind;
  logic::FormulaDocument out;
  out.specs = doc.specs;
  std::map<int, std::string> spec_for_arity;

  auto spec_name = [&](int k) {
    auto it = spec_for_arity.find(k);
    if (it != spec_for_arity.end()) return it->second;
    std::string name =
        detail::fresh_spec_name(out, "connflip" + std::to_string(k));
    FlipSpec spec = compile_conn_to_flipconn(k, name);
    out.specs.push_back(spec);
    spec_for_arity.emplace(k, name);
    return name;
  };

  auto rewrite = [&](auto&& self, const Formula& f) -> FormulaPtr {
    if (f.kind == Kind::Conn) {
      const int k = static_cast<int>(f.args.size()) - 2;
      auto flip = logic::make(Kind::FlipConn, f.pos);
      flip->name = spec_name(k);
      flip->args = f.args;
      FormulaPtr acc = flip;
      // Conjoin t ≠ aᵢ then s ≠ aᵢ (innermost last, so the printed form
      // reads s-inequalities first).
      for (int which = 1; which >= 0; --which)
        for (int i = k - 1; i >= 0; --i) {
          auto eq = logic::make(Kind::Eq, f.pos);
          eq->args = {f.args[which], f.args[i + 2]};
          auto ne = logic::make(Kind::Not, f.pos);
          ne->children.push_back(eq);
          auto conj = logic::make(Kind::And, f.pos);
          conj->children.push_back(ne);
          conj->children.push_back(acc);
          acc = conj;
        }
      return acc;
    }
    auto c = std::make_shared<Formula>(f);
    for (auto& ch : c->children) ch = self(self, *ch);
    return c;
  };
  out.root = rewrite(rewrite, *doc.root);
  return out;
}

// Rewrites flipconn atoms to flipreach over the same spec (which must be
// symmetric for the two to coincide).
inline logic::FormulaDocument rewrite_flipconn_to_flipreach(
    const logic::FormulaDocument& doc) {
  logic::FormulaDocument out;
  out.specs = doc.specs;
  auto rewrite = [&](auto&& self, const logic::Formula& f) -> logic::FormulaPtr {
    auto c = std::make_shared<logic::Formula>(f);
    if (f.kind == logic::Kind::FlipConn) {
      const FlipSpec* spec = doc.find_spec(f.name);
      if (spec) compile_flipconn_to_flipreach(*spec);  // symmetry check
      c->kind = logic::Kind::FlipReach;
    }
    for (auto& ch : c->children) ch = self(self, *ch);
    return c;
  };
  out.root = rewrite(rewrite, *doc.root);
  return out;
}

// flipreach(s,t;ā) is false iff the reachable set X of s in the flipped
// digraph is a suffix with s ∈ X and t ∉ X; X's cutrank (in G) is bounded by
// the number of realized atomic types over ā. Returns whether both the
// equivalence and the rank bound hold.
inline bool check_freach_suffix_duality(const ColoredGraph& g,
                                        const FlipSpec& spec,
                                        const std::vector<int>& a, int s,
                                        int t) {
  Digraph h = apply_flip(g, spec, a);
  VertexSet x = h.reachable_from(s);
  const bool direct = x.contains(t);
  const bool witness_found = is_suffix(h, x) && x.contains(s) && !x.contains(t);
  if (!direct != witness_found) return false;

  std::vector<AtomicType> seen;
  for (int v = 0; v < g.n(); ++v) {
    AtomicType ty = atomic_type(g, v, a);
    if (std::find(seen.begin(), seen.end(), ty) == seen.end())
      seen.push_back(ty);
  }
  return cutrank(g, x) <= static_cast<int>(seen.size());
}

}  // namespace lrmso
