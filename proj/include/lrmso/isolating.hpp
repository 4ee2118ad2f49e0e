#pragma once

// Search for a symmetric flip isolating a set X: parameters S and per
// type-class-pair toggle bits such that the flipped graph has no edge
// between X and its complement (X becomes a union of connected components).
// For a fixed S such a flip exists iff for every unordered pair {K, L} of
// atomic-type classes the cross pairs (K∩X)×(L∩X̂) ∪ (L∩X)×(K∩X̂) are
// adjacency-homogeneous; the toggle is set exactly on the all-edge pairs.
// S candidates are tried by size, then lexicographically.

#include <optional>
#include <vector>

#include "lrmso/errors.hpp"
#include "lrmso/flip.hpp"
#include "lrmso/graph.hpp"
#include "lrmso/vc.hpp"
#include "lrmso/vertex_set.hpp"

namespace lrmso {

struct IsolatingFlip {
  std::vector<int> s;  // chosen parameters, ascending
  FlipSpec spec;       // symmetric; fully-ground patterns for toggled pairs
};

namespace detail {

// Fully-ground pattern for one atomic type: pins every eq/adj position and
// the presence/absence of every color the graph declares.
inline TypePattern ground_pattern(const AtomicType& t, int k,
                                  const std::vector<std::string>& all_colors) {
  TypePattern p;
  p.eq_care = p.adj_care =
      k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  p.eq_val = t.eq;
  p.adj_val = t.adj;
  for (const auto& name : all_colors)
    p.color_req.emplace_back(
        name, std::binary_search(t.colors.begin(), t.colors.end(), name));
  return p;
}

}  // namespace detail

inline std::optional<IsolatingFlip> find_isolating_flip(const ColoredGraph& g,
                                                        const VertexSet& x,
                                                        int l_max) {
  const int n = g.n();
  if (n > 16)
    throw Error(ErrorCode::TooLarge, "isolating-flip search capped at n = 16");
  const VertexSet xc = x.complement();
  std::vector<std::string> all_colors;
  for (const auto& [name, members] : g.colors()) all_colors.push_back(name);

  std::optional<IsolatingFlip> found;
  for (int size = 0; size <= std::min(l_max, n) && !found; ++size) {
    detail::for_each_combination(n, size, [&](const std::vector<int>& s) {
      // Type classes over s, in first-occurrence order.
      std::vector<AtomicType> types;
      std::vector<VertexSet> classes;
      std::vector<int> class_of(n, -1);
      for (int v = 0; v < n; ++v) {
        AtomicType t = atomic_type(g, v, s);
        int id = -1;
        for (std::size_t i = 0; i < types.size(); ++i)
          if (types[i] == t) {
            id = static_cast<int>(i);
            break;
          }
        if (id < 0) {
          id = static_cast<int>(types.size());
          types.push_back(t);
          classes.emplace_back(n);
        }
        classes[id].add(v);
        class_of[v] = id;
      }
      const int nc = static_cast<int>(types.size());

      // Homogeneity of the cross relation for every unordered class pair.
      FlipSpec spec;
      spec.name = "isolate";
      spec.k = size;
      spec.symmetric = true;
      for (int i = 0; i < nc; ++i)
        for (int j = i; j < nc; ++j) {
          int seen = -1;  // -1 none, 0 all non-edges so far, 1 all edges
          auto scan = [&](const VertexSet& from, const VertexSet& to) {
            for (int u = from.first(); u >= 0; u = from.next(u + 1))
              for (int v = to.first(); v >= 0; v = to.next(v + 1)) {
                int e = g.has_edge(u, v) ? 1 : 0;
                if (seen == -1)
                  seen = e;
                else if (seen != e)
                  return false;
              }
            return true;
          };
          if (!scan(classes[i] & x, classes[j] & xc)) return false;
          if (!scan(classes[j] & x, classes[i] & xc)) return false;
          if (seen == 1)
            spec.pairs.emplace_back(
                detail::ground_pattern(types[i], size, all_colors),
                detail::ground_pattern(types[j], size, all_colors));
        }
      found = IsolatingFlip{s, spec};
      return true;
    });
  }
  return found;
}

}  // namespace lrmso
