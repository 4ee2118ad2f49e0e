#pragma once

// Separations (L,R) covering V with no edge between L∖R and R∖L, and the
// capture construction: starting from a cut (X, X̂), rows/columns of the cut
// matrix that repeat at least t times are "frequent"; the separation keeps
// every frequent-row vertex strictly left and every frequent-column vertex
// strictly right. An edge between those two classes certifies a K_{t,t}
// subgraph, so on K_{t,t}-free graphs the construction always succeeds and
// its order is at most 2^{r+1}(t-1) where r is the cutrank of X.

#include <map>
#include <string>
#include <vector>

#include "lrmso/errors.hpp"
#include "lrmso/graph.hpp"
#include "lrmso/rank.hpp"
#include "lrmso/vertex_set.hpp"

namespace lrmso {

struct Separation {
  VertexSet left;
  VertexSet right;
  int order() const { return (left & right).count(); }
};

inline Separation capture_separation(const ColoredGraph& g, const VertexSet& x,
                                     int t) {
  if (t < 1) throw Error(ErrorCode::BadParameter, "capture: t must be >= 1");
  const int n = g.n();
  if (x.empty()) return {VertexSet(n), VertexSet::full(n)};
  if (x == VertexSet::full(n)) return {VertexSet::full(n), VertexSet(n)};

  CutMatrix m = cut_matrix(g, x);
  auto cols = detail::column_sets(m);

  // Multiplicity of each row / column pattern.
  std::map<std::vector<int>, int> row_mult, col_mult;
  for (const auto& r : m.rows) ++row_mult[r.members()];
  for (const auto& c : cols) ++col_mult[c.members()];

  VertexSet left = x;                  // X plus non-frequent column vertices
  VertexSet right = x.complement();    // X̂ plus non-frequent row vertices
  for (int i = 0; i < m.nrows; ++i)
    if (row_mult[m.rows[i].members()] < t) left.remove(m.row_index[i]);
  for (int j = 0; j < m.ncols; ++j)
    if (col_mult[cols[j].members()] < t) right.remove(m.col_index[j]);
  // left currently holds the frequent-row part of X; right the frequent-col
  // part of X̂. Those are L∖R and R∖L; check them before widening.
  for (int u = left.first(); u >= 0; u = left.next(u + 1))
    for (int v = right.first(); v >= 0; v = right.next(v + 1))
      if (g.has_edge(u, v))
        throw Error(ErrorCode::NotASeparation,
                    "edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} joins a frequent row class to a frequent column "
                        "class, witnessing a K_{" +
                        std::to_string(t) + "," + std::to_string(t) +
                        "} subgraph");
  // L = X ∪ {non-frequent cols} = V ∖ {frequent cols}; R symmetrically.
  Separation s;
  s.left = right.complement();
  s.right = left.complement();
  return s;
}

}  // namespace lrmso
