#pragma once

// Strongly connected components and the condensation poset (Scc, <=).
// Components are numbered in the order Tarjan's algorithm emits them, which
// is a reverse topological order of the condensation: every arc of the
// condensation DAG goes from a higher component index to a lower one.
// reach[c] is the reflexive-transitive closure over component indices, so
// leq(c, d) answers "is d reachable from c" — the poset order used for
// suffixes, seeds and the <_a / <=_a comparisons.

#include <vector>

#include "lrmso/graph.hpp"
#include "lrmso/vertex_set.hpp"

namespace lrmso {

struct SccCondensation {
  std::vector<int> comp_of;          // vertex -> component index
  int comp_count = 0;
  std::vector<VertexSet> members;    // component -> vertex set
  std::vector<VertexSet> dag_out;    // component -> successor components
  std::vector<VertexSet> reach;      // reflexive-transitive closure

  // c <= d in the condensation poset: d reachable from c.
  bool leq(int c, int d) const { return reach[c].contains(d); }
  bool less(int c, int d) const { return c != d && leq(c, d); }

  // Vertex-level preorder: u <=_H v iff v reachable from u.
  bool leq_v(int u, int v) const { return leq(comp_of[u], comp_of[v]); }
  bool less_v(int u, int v) const { return leq_v(u, v) && !leq_v(v, u); }
};

inline SccCondensation condense(const Digraph& h) {
  const int n = h.n();
  SccCondensation c;
  c.comp_of.assign(n, -1);

  // Iterative Tarjan. index/low track discovery order; stack_on marks the
  // live stack. Frames carry the next neighbor to scan.
  std::vector<int> index(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  int next_index = 0;

  struct Frame {
    int v;
    int next_nb;  // resume point inside out(v)
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      int v = f.v;
      if (index[v] == -1) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      int w = h.out(v).next(f.next_nb);
      if (w >= 0) {
        f.next_nb = w + 1;
        if (index[w] == -1) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      // v finished: fold into parent or emit a component.
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] == index[v]) {
        VertexSet comp(n);
        while (true) {
          int w2 = stack.back();
          stack.pop_back();
          on_stack[w2] = false;
          comp.add(w2);
          c.comp_of[w2] = c.comp_count;
          if (w2 == v) break;
        }
        c.members.push_back(comp);
        ++c.comp_count;
      }
    }
  }

  const int m = c.comp_count;
  c.dag_out.assign(m, VertexSet(m));
  for (auto [u, v] : h.arcs()) {
    int cu = c.comp_of[u], cv = c.comp_of[v];
    if (cu != cv) c.dag_out[cu].add(cv);
  }

  // Tarjan emits sinks first, so every successor of component i has a
  // smaller index and its closure is already final when we reach i.
  c.reach.assign(m, VertexSet(m));
  for (int i = 0; i < m; ++i) {
    c.reach[i].add(i);
    for (int d = c.dag_out[i].first(); d >= 0; d = c.dag_out[i].next(d + 1))
      c.reach[i] |= c.reach[d];
  }
  return c;
}

}  // namespace lrmso
