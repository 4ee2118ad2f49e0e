#pragma once

// The auxiliary digraph H over two parameter halves ā⁺, ā⁻ (each a set of at
// most 2^r vertices). A pair of halves is admissible when they are disjoint
// and ā⁺ has cutrank at most r inside the induced subgraph on ā⁺ ∪ ā⁻.
//
// Inadmissible halves give the "everything near ā or along an edge" digraph:
//   arc u→v iff u ∈ ā or v ∈ ā or uv ∈ E(G).
// Admissible halves use the twin representatives
//   φ⁺(v) = earliest a ∈ ā⁺ (ascending id) with N(v) ∩ ā⁻ = N(a) ∩ ā⁻,
//   φ⁻(v) = earliest a ∈ ā⁻ (ascending id) with N(v) ∩ ā⁺ = N(a) ∩ ā⁺,
// (⊥ when no such a exists) and put the arc u→v, u ≠ v, iff any of
//   (i)   u ∈ ā⁻ or v ∈ ā⁺;
//   (ii)  φ⁺(u) = ⊥ and v ∈ ā⁻;
//   (iii) u ∈ ā⁺ and φ⁻(v) = ⊥;
//   (iv)  E(u,v) xor [φ⁺(u) ≠ ⊥ and φ⁻(v) ≠ ⊥ and E(φ⁺(u), φ⁻(v))].
// The construction depends only on the two sets (tuple order and repetition
// never matter), and suffixes of H are exactly the low-rank sets the
// enumeration modules sweep for.

#include <vector>

#include "lrmso/errors.hpp"
#include "lrmso/graph.hpp"
#include "lrmso/rank.hpp"
#include "lrmso/vertex_set.hpp"

namespace lrmso {

struct RepAssignment {
  std::vector<int> phi_plus;   // vertex -> member of a_plus, or -1
  std::vector<int> phi_minus;  // vertex -> member of a_minus, or -1
  VertexSet a_plus;
  VertexSet a_minus;
};

struct HResult {
  Digraph h;
  RepAssignment rep;
  bool admissible = false;
};

namespace detail {

// cutrank of `side` within the induced subgraph on `ground`.
inline int induced_cutrank(const ColoredGraph& g, const VertexSet& ground,
                           const VertexSet& side) {
  std::vector<int> verts = ground.members();
  const int m = static_cast<int>(verts.size());
  ColoredGraph sub(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.has_edge(verts[i], verts[j])) sub.add_edge(i, j);
  VertexSet local(m);
  for (int i = 0; i < m; ++i)
    if (side.contains(verts[i])) local.add(i);
  return cutrank(sub, local);
}

}  // namespace detail

inline HResult build_h_digraph(const ColoredGraph& g, const VertexSet& a_plus,
                               const VertexSet& a_minus, int r) {
  const int n = g.n();
  if (r < 0) throw Error(ErrorCode::BadParameter, "h-digraph: r must be >= 0");
  const long long half_cap = r >= 62 ? -1 : (1LL << r);
  if (half_cap >= 0 &&
      (a_plus.count() > half_cap || a_minus.count() > half_cap))
    throw Error(ErrorCode::BadParameter,
                "h-digraph: each half may contain at most 2^r vertices");

  HResult res;
  res.rep.a_plus = a_plus;
  res.rep.a_minus = a_minus;
  const VertexSet a_bar = a_plus | a_minus;

  res.admissible = !a_plus.intersects(a_minus) &&
                   detail::induced_cutrank(g, a_bar, a_plus) <= r;

  // Twin representatives (well-defined regardless of admissibility).
  auto assign = [&](const VertexSet& half, const VertexSet& other) {
    std::vector<int> phi(n, -1);
    for (int v = 0; v < n; ++v) {
      VertexSet nv = g.neighbors(v) & other;
      for (int a = half.first(); a >= 0; a = half.next(a + 1))
        if ((g.neighbors(a) & other) == nv) {
          phi[v] = a;
          break;
        }
    }
    return phi;
  };
  res.rep.phi_plus = assign(a_plus, a_minus);
  res.rep.phi_minus = assign(a_minus, a_plus);

  Digraph h(n);
  if (!res.admissible) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        if (a_bar.contains(u) || a_bar.contains(v) || g.has_edge(u, v))
          h.add_arc(u, v);
      }
    res.h = h;
    return res;
  }

  const auto& fp = res.rep.phi_plus;
  const auto& fm = res.rep.phi_minus;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      bool arc = a_minus.contains(u) || a_plus.contains(v);                 // (i)
      if (!arc) arc = fp[u] == -1 && a_minus.contains(v);                   // (ii)
      if (!arc) arc = a_plus.contains(u) && fm[v] == -1;                    // (iii)
      if (!arc) {
        bool rep_edge = fp[u] != -1 && fm[v] != -1 && g.has_edge(fp[u], fm[v]);
        arc = g.has_edge(u, v) != rep_edge;                                 // (iv)
      }
      if (arc) h.add_arc(u, v);
    }
  res.h = h;
  return res;
}

}  // namespace lrmso
