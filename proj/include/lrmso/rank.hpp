#pragma once

// Exact linear algebra on cut matrices. The cut matrix of (X, X̂) is the
// 0/1 matrix with rows indexed by X and columns by X̂ (both ascending by
// vertex id); entry (u,v) = 1 iff uv is an edge. Ranks are computed exactly:
// over F₂ with word-packed XOR elimination, over ℚ with Bareiss fraction-free
// integer elimination (no floating point anywhere).

#include <algorithm>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrmso/graph.hpp"
#include "lrmso/vertex_set.hpp"

namespace lrmso {

struct CutMatrix {
  int nrows = 0;
  int ncols = 0;
  std::vector<VertexSet> rows;  // each row is a bitset over column positions
  std::vector<int> row_index;   // vertex ids of X, ascending
  std::vector<int> col_index;   // vertex ids of X̂, ascending
};

inline CutMatrix cut_matrix(const ColoredGraph& g, const VertexSet& x) {
  CutMatrix m;
  m.row_index = x.members();
  VertexSet xc = x.complement();
  m.col_index = xc.members();
  m.nrows = static_cast<int>(m.row_index.size());
  m.ncols = static_cast<int>(m.col_index.size());
  m.rows.reserve(m.nrows);
  for (int u : m.row_index) {
    VertexSet row(m.ncols);
    for (int j = 0; j < m.ncols; ++j)
      if (g.has_edge(u, m.col_index[j])) row.add(j);
    m.rows.push_back(row);
  }
  return m;
}

inline int rank_f2(const CutMatrix& m) {
  std::vector<VertexSet> rows = m.rows;
  int rank = 0;
  for (int c = 0; c < m.ncols && rank < m.nrows; ++c) {
    int pivot = -1;
    for (int i = rank; i < m.nrows; ++i)
      if (rows[i].contains(c)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = rank + 1; i < m.nrows; ++i)
      if (rows[i].contains(c)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

// Rank over ℚ by Bareiss elimination: every division by the previous pivot
// is exact, so all intermediates stay integral (arbitrary precision guards
// against their growth).
inline int rank_q(const CutMatrix& m) {
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> a(m.nrows,
                                      std::vector<cpp_int>(m.ncols, 0));
  for (int i = 0; i < m.nrows; ++i)
    for (int j = 0; j < m.ncols; ++j)
      if (m.rows[i].contains(j)) a[i][j] = 1;
  cpp_int prev = 1;
  int rank = 0;
  for (int c = 0; c < m.ncols && rank < m.nrows; ++c) {
    int pivot = -1;
    for (int i = rank; i < m.nrows; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int i = rank + 1; i < m.nrows; ++i) {
      for (int j = c + 1; j < m.ncols; ++j)
        a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

namespace detail {
inline std::vector<VertexSet> column_sets(const CutMatrix& m) {
  std::vector<VertexSet> cols(m.ncols, VertexSet(m.nrows));
  for (int i = 0; i < m.nrows; ++i)
    for (int j = m.rows[i].first(); j >= 0; j = m.rows[i].next(j + 1))
      cols[j].add(i);
  return cols;
}
}  // namespace detail

// dv(M) = #distinct rows + #distinct columns; 0 if either dimension is 0.
inline int diversity(const CutMatrix& m) {
  if (m.nrows == 0 || m.ncols == 0) return 0;
  std::set<std::vector<int>> rs;
  for (const auto& r : m.rows) rs.insert(r.members());
  std::set<std::vector<int>> cs;
  for (const auto& c : detail::column_sets(m)) cs.insert(c.members());
  return static_cast<int>(rs.size() + cs.size());
}

struct RankMeasures {
  int rk_f2 = 0;
  int rk_q = 0;
  int dv = 0;
};

inline RankMeasures rank_measures(const ColoredGraph& g, const VertexSet& x) {
  CutMatrix m = cut_matrix(g, x);
  return {rank_f2(m), rank_q(m), diversity(m)};
}

inline int cutrank(const ColoredGraph& g, const VertexSet& x) {
  return rank_f2(cut_matrix(g, x));
}

// Keep the first occurrence of each distinct row, then of each distinct
// column. Removing a duplicate row cannot merge two distinct columns (they
// still differ in the kept copy), so the result is order-independent; both
// ranks are preserved.
inline CutMatrix twin_reduce(const CutMatrix& m) {
  std::vector<int> keep_rows;
  {
    std::set<std::vector<int>> seen;
    for (int i = 0; i < m.nrows; ++i)
      if (seen.insert(m.rows[i].members()).second) keep_rows.push_back(i);
  }
  std::vector<int> keep_cols;
  {
    auto cols = detail::column_sets(m);
    std::set<std::vector<int>> seen;
    for (int j = 0; j < m.ncols; ++j) {
      std::vector<int> trace;
      for (int i : keep_rows)
        if (cols[j].contains(i)) trace.push_back(i);
      if (seen.insert(trace).second) keep_cols.push_back(j);
    }
  }
  CutMatrix out;
  out.nrows = static_cast<int>(keep_rows.size());
  out.ncols = static_cast<int>(keep_cols.size());
  for (int i : keep_rows) out.row_index.push_back(m.row_index[i]);
  for (int j : keep_cols) out.col_index.push_back(m.col_index[j]);
  for (int i : keep_rows) {
    VertexSet row(out.ncols);
    for (int jj = 0; jj < out.ncols; ++jj)
      if (m.rows[i].contains(keep_cols[jj])) row.add(jj);
    out.rows.push_back(row);
  }
  return out;
}

// Smallest-index member of X per distinct row of the cut matrix. For X = V
// all rows have width zero and are equal, so the result is {0}; for X = ∅
// it is ∅.
inline VertexSet representatives(const ColoredGraph& g, const VertexSet& x) {
  CutMatrix m = cut_matrix(g, x);
  VertexSet reps(g.n());
  std::set<std::vector<int>> seen;
  for (int i = 0; i < m.nrows; ++i)
    if (seen.insert(m.rows[i].members()).second) reps.add(m.row_index[i]);
  return reps;
}

}  // namespace lrmso
