#pragma once

// Atomic types over a parameter tuple, pattern-based flip specifications,
// A-flips, and the two S-operations (separator form and flip form).
// The atomic type of v over params (a_1..a_k) records eq[i] = [v = a_i],
// adj[i] = [v a_i is an edge] and the colors of v; two vertices with equal
// records satisfy exactly the same atomic formulas relative to the tuple.
// A flip toggles adjacency between type classes: arc u->v present iff
// E(u,v) xor match(atp(u), atp(v)); for symmetric specs the match relation
// is closed under swapping first, so the result is an undirected graph.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lrmso/errors.hpp"
#include "lrmso/graph.hpp"
#include "lrmso/vertex_set.hpp"

namespace lrmso {

inline constexpr int kMaxFlipArity = 64;  // eq/adj packed into one word each

struct AtomicType {
  std::uint64_t eq = 0;
  std::uint64_t adj = 0;
  std::vector<std::string> colors;  // sorted

  friend bool operator==(const AtomicType&, const AtomicType&) = default;
  friend auto operator<=>(const AtomicType&, const AtomicType&) = default;
};

inline AtomicType atomic_type(const ColoredGraph& g, int v,
                              const std::vector<int>& params) {
  if (static_cast<int>(params.size()) > kMaxFlipArity)
    throw Error(ErrorCode::BadParameter, "atomic_type: arity exceeds 64");
  g.check_vertex(v);
  AtomicType t;
  for (std::size_t i = 0; i < params.size(); ++i) {
    g.check_vertex(params[i]);
    if (v == params[i]) t.eq |= std::uint64_t{1} << i;
    if (g.has_edge(v, params[i])) t.adj |= std::uint64_t{1} << i;
  }
  t.colors = g.colors_of(v);
  return t;
}

// One side of a pattern pair: a mask over {0,1,*}^k for eq and adj (care bit
// set = position constrained to the value bit) plus color constraints.
struct TypePattern {
  std::uint64_t eq_care = 0, eq_val = 0;
  std::uint64_t adj_care = 0, adj_val = 0;
  std::vector<std::pair<std::string, bool>> color_req;  // (name, must-have)

  friend bool operator==(const TypePattern&, const TypePattern&) = default;

  bool matches(const AtomicType& t) const {
    if ((t.eq & eq_care) != (eq_val & eq_care)) return false;
    if ((t.adj & adj_care) != (adj_val & adj_care)) return false;
    for (const auto& [name, want] : color_req) {
      bool has = std::binary_search(t.colors.begin(), t.colors.end(), name);
      if (has != want) return false;
    }
    return true;
  }
};

struct FlipSpec {
  std::string name;
  int k = 0;
  bool symmetric = false;
  std::vector<std::pair<TypePattern, TypePattern>> pairs;

  friend bool operator==(const FlipSpec&, const FlipSpec&) = default;
};

// Ordered type-pair match; symmetric specs match under either orientation.
inline bool spec_matches(const FlipSpec& spec, const AtomicType& tu,
                         const AtomicType& tv) {
  for (const auto& [p, q] : spec.pairs) {
    if (p.matches(tu) && q.matches(tv)) return true;
    if (spec.symmetric && p.matches(tv) && q.matches(tu)) return true;
  }
  return false;
}

inline Digraph apply_flip(const ColoredGraph& g, const FlipSpec& spec,
                          const std::vector<int>& params) {
  if (static_cast<int>(params.size()) != spec.k)
    throw Error(ErrorCode::BadParameter,
                "flip '" + spec.name + "': expected " + std::to_string(spec.k) +
                    " parameter(s), got " + std::to_string(params.size()));
  const int n = g.n();
  std::vector<AtomicType> types;
  types.reserve(n);
  for (int v = 0; v < n; ++v) types.push_back(atomic_type(g, v, params));

  // Memoize the match relation per distinct ordered type pair.
  std::map<std::pair<AtomicType, AtomicType>, bool> match;
  Digraph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      auto key = std::make_pair(types[u], types[v]);
      auto it = match.find(key);
      if (it == match.end())
        it = match.emplace(key, spec_matches(spec, types[u], types[v])).first;
      if (g.has_edge(u, v) != it->second) h.add_arc(u, v);
    }
  return h;
}

// Isolate the vertices of S: drop every edge incident to S, and mark what
// was lost — for the i-th member s of S (ascending), color "Nbr_i" is the
// old neighborhood of s and "Pt_i" is {s}.
inline ColoredGraph s_operation_separator(const ColoredGraph& g,
                                          const VertexSet& s) {
  ColoredGraph out(g.n());
  for (auto [u, v] : g.edges())
    if (!s.contains(u) && !s.contains(v)) out.add_edge(u, v);
  for (const auto& [name, members] : g.colors()) out.set_color(name, members);
  int i = 0;
  for (int v = s.first(); v >= 0; v = s.next(v + 1), ++i) {
    out.set_color("Nbr_" + std::to_string(i), g.neighbors(v));
    out.set_color("Pt_" + std::to_string(i), VertexSet::of(g.n(), {v}));
  }
  return out;
}

inline FlipSpec identity_flip(int k) {
  FlipSpec spec;
  spec.name = "identity";
  spec.k = k;
  spec.symmetric = true;
  return spec;  // no pairs: nothing matches, graph unchanged
}

// Symmetric flip with parameter set S plus one color per realized atomic
// type over S (types computed in the input graph; classes named T0, T1, ...
// by first occurrence in vertex order).
inline ColoredGraph s_operation_flip(const ColoredGraph& g, const VertexSet& s,
                                     const FlipSpec& spec) {
  if (!spec.symmetric)
    throw Error(ErrorCode::SymmetryRequired,
                "s-operation flip '" + spec.name + "' must be symmetric");
  std::vector<int> params = s.members();
  if (static_cast<int>(params.size()) != spec.k)
    throw Error(ErrorCode::BadParameter,
                "s-operation: |S| must equal the spec arity");
  Digraph flipped = apply_flip(g, spec, params);
  ColoredGraph out = to_undirected(flipped);
  for (const auto& [name, members] : g.colors()) out.set_color(name, members);
  std::map<AtomicType, int> class_id;
  std::vector<VertexSet> classes;
  for (int v = 0; v < g.n(); ++v) {
    AtomicType t = atomic_type(g, v, params);
    auto [it, fresh] = class_id.emplace(t, static_cast<int>(classes.size()));
    if (fresh) classes.emplace_back(g.n());
    classes[it->second].add(v);
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    out.set_color("T" + std::to_string(i), classes[i]);
  return out;
}

inline ColoredGraph s_operation_flip(const ColoredGraph& g,
                                     const VertexSet& s) {
  return s_operation_flip(g, s, identity_flip(s.count()));
}

}  // namespace lrmso
