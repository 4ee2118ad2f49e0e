#pragma once

// VC dimension of the neighborhood set system {N(v) : v in V}, and the
// order-k duality check for bipartite relations: either a small set A₀ that
// blocks every b (each b misses some a in A₀), or a small set B₀ that hits
// every a. Both are exhaustive searches over candidate sets of size 0..k in
// lexicographic order, A side first.

#include <vector>

#include "lrmso/errors.hpp"
#include "lrmso/graph.hpp"
#include "lrmso/vertex_set.hpp"

namespace lrmso {

inline constexpr int kVcMaxVertices = 16;

namespace detail {

// Visit index combinations of size k from [n] in lexicographic order;
// stop early when f returns true.
template <typename F>
bool for_each_combination(int n, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  while (true) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// Largest |S| such that every subset of S occurs as N(v) ∩ S. Shattering is
// monotone downward, so stop at the first size with no shattered set.
inline int vc_dimension(const ColoredGraph& g) {
  const int n = g.n();
  if (n > kVcMaxVertices)
    throw Error(ErrorCode::TooLarge,
                "vc_dimension: graph exceeds " +
                    std::to_string(kVcMaxVertices) + " vertices");
  int best = 0;
  for (int d = 1; d <= n; ++d) {
    bool found = detail::for_each_combination(n, d, [&](const std::vector<int>& s) {
      // Trace of v on S as a d-bit mask.
      std::vector<bool> hit(static_cast<std::size_t>(1) << d, false);
      int distinct = 0;
      for (int v = 0; v < n; ++v) {
        unsigned mask = 0;
        for (int b = 0; b < d; ++b)
          if (g.has_edge(v, s[b])) mask |= 1u << b;
        if (!hit[mask]) {
          hit[mask] = true;
          ++distinct;
        }
      }
      return distinct == (1 << d);
    });
    if (!found) break;
    best = d;
  }
  return best;
}

struct BipartiteRel {
  int na = 0;
  int nb = 0;
  std::vector<VertexSet> adj;  // adj[a] ⊆ [nb]: the b's with E(a,b)

  bool has(int a, int b) const { return adj[a].contains(b); }
};

struct DualityResult {
  bool holds = false;
  char side = ' ';            // 'A' or 'B' when holds
  std::vector<int> witness;   // indices on that side
};

inline constexpr int kDualityMaxSide = 20;

// A₀ ⊆ A with |A₀| ≤ k and ∀b ∃a∈A₀ ¬E(a,b); or B₀ ⊆ B with |B₀| ≤ k and
// ∀a ∃b∈B₀ E(a,b). A side searched first, sizes ascending, lexicographic.
inline DualityResult check_duality(const BipartiteRel& rel, int k) {
  if (rel.na > kDualityMaxSide || rel.nb > kDualityMaxSide)
    throw Error(ErrorCode::TooLarge,
                "check_duality: side exceeds " +
                    std::to_string(kDualityMaxSide) + " elements");
  if (k < 0) throw Error(ErrorCode::BadParameter, "check_duality: k must be >= 0");
  DualityResult res;
  for (int size = 0; size <= std::min(k, rel.na); ++size) {
    bool found =
        detail::for_each_combination(rel.na, size, [&](const std::vector<int>& a0) {
          for (int b = 0; b < rel.nb; ++b) {
            bool blocked = false;
            for (int a : a0)
              if (!rel.has(a, b)) {
                blocked = true;
                break;
              }
            if (!blocked) return false;
          }
          res = {true, 'A', a0};
          return true;
        });
    if (found) return res;
  }
  for (int size = 0; size <= std::min(k, rel.nb); ++size) {
    bool found =
        detail::for_each_combination(rel.nb, size, [&](const std::vector<int>& b0) {
          for (int a = 0; a < rel.na; ++a) {
            bool hit = false;
            for (int b : b0)
              if (rel.has(a, b)) {
                hit = true;
                break;
              }
            if (!hit) return false;
          }
          res = {true, 'B', b0};
          return true;
        });
    if (found) return res;
  }
  return res;
}

}  // namespace lrmso
