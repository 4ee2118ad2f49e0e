#pragma once

// Seeds (X₊, X₋, 𝒳): X₊ and X₋ are the vertices strictly above / strictly
// below a chosen vertex list b̄ in the reachability preorder of a digraph H
// (u strictly below v: v reachable from u but not vice versa), and 𝒳 groups
// the remainder into strongly connected components. The list b̄ is
// consistent when every bᵢ lies outside X₊ ∪ X₋ and no two remainder
// vertices are strictly comparable; otherwise the seed degenerates to
// (∅, V, {}) whose span is {∅}. Span(X₊, X₋, 𝒳) = {X₊ ∪ ⋃𝒴 : 𝒴 ⊆ 𝒳}.
//
// seed_for_suffix inverts this: given a suffix X of H it builds a seed with
// X in its span and a witness list b̄ that regenerates the seed. It starts
// from (X, V∖X, ∅) and repeatedly moves a ≤-minimal component of X₊ with no
// part strictly below it into 𝒳 (mirrored on X₋ with ≤-maximal components
// with no part above), which keeps X₊ upward closed, X₋ downward closed and
// 𝒳 an antichain; then b̄ is assembled from inclusion-minimal covers B₊
// (every X₊ vertex strictly above some member) and B₋ (dually), each found
// by greedy removal from the parts' smallest-index representatives.

#include <algorithm>
#include <string>
#include <vector>

#include "lrmso/errors.hpp"
#include "lrmso/flip.hpp"
#include "lrmso/graph.hpp"
#include "lrmso/lowrank.hpp"
#include "lrmso/scc.hpp"
#include "lrmso/vertex_set.hpp"

namespace lrmso {

struct Seed {
  VertexSet x_plus;
  VertexSet x_minus;
  std::vector<VertexSet> parts;  // pairwise disjoint, nonempty, canonical order

  friend bool operator==(const Seed&, const Seed&) = default;
};

inline Seed trivial_seed(int n) {
  return {VertexSet(n), VertexSet::full(n), {}};
}

inline Seed seed_from_digraph(const Digraph& h, const std::vector<int>& b) {
  const int n = h.n();
  SccCondensation c = condense(h);
  const int m = c.comp_count;

  VertexSet above(m), below(m);  // component-level X₊ / X₋
  for (int bi : b) {
    if (bi < 0 || bi >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "seed: vertex " + std::to_string(bi) + " out of range");
    int cb = c.comp_of[bi];
    for (int d = 0; d < m; ++d) {
      if (d == cb) continue;
      if (c.leq(cb, d) && !c.leq(d, cb)) above.add(d);
      if (c.leq(d, cb) && !c.leq(cb, d)) below.add(d);
    }
  }

  // Consistency: no bᵢ strictly above/below another, and the remainder
  // components must form an antichain.
  for (int bi : b) {
    int cb = c.comp_of[bi];
    if (above.contains(cb) || below.contains(cb)) return trivial_seed(n);
  }
  VertexSet remainder(m);
  for (int d = 0; d < m; ++d)
    if (!above.contains(d) && !below.contains(d)) remainder.add(d);
  for (int d = remainder.first(); d >= 0; d = remainder.next(d + 1))
    for (int e = remainder.first(); e >= 0; e = remainder.next(e + 1))
      if (d != e && c.leq(d, e) && !c.leq(e, d)) return trivial_seed(n);

  Seed seed;
  seed.x_plus = VertexSet(n);
  seed.x_minus = VertexSet(n);
  for (int d = above.first(); d >= 0; d = above.next(d + 1))
    seed.x_plus |= c.members[d];
  for (int d = below.first(); d >= 0; d = below.next(d + 1))
    seed.x_minus |= c.members[d];
  for (int d = remainder.first(); d >= 0; d = remainder.next(d + 1))
    seed.parts.push_back(c.members[d]);
  std::sort(seed.parts.begin(), seed.parts.end());
  return seed;
}

inline Seed seed_from_params(const ColoredGraph& g, const FlipSpec& spec,
                             const std::vector<int>& a,
                             const std::vector<int>& b) {
  return seed_from_digraph(apply_flip(g, spec, a), b);
}

inline SuffixFamily span(const Seed& seed, std::size_t cap = 1000000) {
  const std::size_t p = seed.parts.size();
  if (p >= 63 || (std::size_t{1} << p) > cap)
    throw Error(ErrorCode::CapExceeded,
                "span enumeration exceeds cap of " + std::to_string(cap));
  SuffixFamily fam;
  for (std::size_t mask = 0; mask < (std::size_t{1} << p); ++mask) {
    VertexSet x = seed.x_plus;
    for (std::size_t i = 0; i < p; ++i)
      if (mask & (std::size_t{1} << i)) x |= seed.parts[i];
    fam.sets.push_back(x);
  }
  std::sort(fam.sets.begin(), fam.sets.end());
  fam.source.assign(fam.sets.size(), "span");
  return fam;
}

inline bool span_contains(const Seed& seed, const VertexSet& x) {
  if (!seed.x_plus.subset_of(x)) return false;
  if (x.intersects(seed.x_minus)) return false;
  for (const auto& part : seed.parts)
    if (part.intersects(x) && !part.subset_of(x)) return false;
  return true;
}

struct SeedForSuffix {
  std::vector<int> b;  // sorted; may be empty
  Seed seed;
  int cover_plus = 0;   // |B₊|
  int cover_minus = 0;  // |B₋|
  int atp_count = 0;    // realized atomic types over the parameter tuple
  bool bound_ok = false;  // both covers within atp_count²
};

inline SeedForSuffix seed_for_suffix(const Digraph& h, const ColoredGraph& g,
                                     const std::vector<int>& a,
                                     const VertexSet& x) {
  const int n = h.n();
  if (!is_suffix(h, x))
    throw Error(ErrorCode::NotASuffix,
                "the set " + x.str() + " is not closed under out-arcs");

  SccCondensation c = condense(h);
  const int m = c.comp_count;
  // A suffix is a union of components.
  VertexSet plus_comps(m), minus_comps(m), part_comps(m);
  for (int d = 0; d < m; ++d)
    (c.members[d].subset_of(x) ? plus_comps : minus_comps).add(d);

  auto strictly_less = [&](int d, int e) { return c.leq(d, e) && !c.leq(e, d); };

  // Plus phase: a component of X₊ is violating while no part sits strictly
  // below it; move a ≤-minimal violating one (smallest index among those
  // with no violating component below) into 𝒳 until none remain.
  while (true) {
    std::vector<int> viol;
    for (int d = plus_comps.first(); d >= 0; d = plus_comps.next(d + 1)) {
      bool ok = false;
      for (int p = part_comps.first(); p >= 0; p = part_comps.next(p + 1))
        if (strictly_less(p, d)) {
          ok = true;
          break;
        }
      if (!ok) viol.push_back(d);
    }
    if (viol.empty()) break;
    int pick = -1;
    for (int d : viol) {
      bool minimal = true;
      for (int e : viol)
        if (e != d && strictly_less(e, d)) {
          minimal = false;
          break;
        }
      if (minimal) {
        pick = d;
        break;
      }
    }
    plus_comps.remove(pick);
    part_comps.add(pick);
  }

  // Minus phase, mirrored: violating = no part strictly above; move a
  // ≤-maximal violating component.
  while (true) {
    std::vector<int> viol;
    for (int d = minus_comps.first(); d >= 0; d = minus_comps.next(d + 1)) {
      bool ok = false;
      for (int p = part_comps.first(); p >= 0; p = part_comps.next(p + 1))
        if (strictly_less(d, p)) {
          ok = true;
          break;
        }
      if (!ok) viol.push_back(d);
    }
    if (viol.empty()) break;
    int pick = -1;
    for (int d : viol) {
      bool maximal = true;
      for (int e : viol)
        if (e != d && strictly_less(d, e)) {
          maximal = false;
          break;
        }
      if (maximal) {
        pick = d;
        break;
      }
    }
    minus_comps.remove(pick);
    part_comps.add(pick);
  }

  // Covers: candidates are the smallest-index vertex of each part; greedy
  // removal in ascending vertex order leaves an inclusion-minimal cover.
  std::vector<int> cand_comps = part_comps.members();
  std::sort(cand_comps.begin(), cand_comps.end(), [&](int p, int q) {
    return c.members[p].first() < c.members[q].first();
  });
  auto minimal_cover = [&](const VertexSet& target, bool above) {
    // above=true: every target component needs a kept part strictly below it
    // (its representative then sits strictly below every target vertex).
    std::vector<int> kept = cand_comps;
    auto covers = [&](const std::vector<int>& ks) {
      for (int d = target.first(); d >= 0; d = target.next(d + 1)) {
        bool hit = false;
        for (int p : ks)
          if (above ? strictly_less(p, d) : strictly_less(d, p)) {
            hit = true;
            break;
          }
        if (!hit) return false;
      }
      return true;
    };
    for (std::size_t i = 0; i < kept.size();) {
      std::vector<int> without = kept;
      without.erase(without.begin() + i);
      if (covers(without))
        kept = std::move(without);
      else
        ++i;
    }
    std::vector<int> reps;
    for (int p : kept) reps.push_back(c.members[p].first());
    return reps;
  };
  std::vector<int> b_plus = minimal_cover(plus_comps, true);
  std::vector<int> b_minus = minimal_cover(minus_comps, false);

  SeedForSuffix res;
  res.cover_plus = static_cast<int>(b_plus.size());
  res.cover_minus = static_cast<int>(b_minus.size());
  res.b = b_plus;
  res.b.insert(res.b.end(), b_minus.begin(), b_minus.end());
  std::sort(res.b.begin(), res.b.end());
  res.b.erase(std::unique(res.b.begin(), res.b.end()), res.b.end());

  res.seed.x_plus = VertexSet(n);
  res.seed.x_minus = VertexSet(n);
  for (int d = plus_comps.first(); d >= 0; d = plus_comps.next(d + 1))
    res.seed.x_plus |= c.members[d];
  for (int d = minus_comps.first(); d >= 0; d = minus_comps.next(d + 1))
    res.seed.x_minus |= c.members[d];
  for (int d = part_comps.first(); d >= 0; d = part_comps.next(d + 1))
    res.seed.parts.push_back(c.members[d]);
  std::sort(res.seed.parts.begin(), res.seed.parts.end());

  // Realized atomic types over the parameter tuple, for the cover-size bound.
  {
    std::vector<AtomicType> seen;
    for (int v = 0; v < g.n(); ++v) {
      AtomicType t = atomic_type(g, v, a);
      if (std::find(seen.begin(), seen.end(), t) == seen.end())
        seen.push_back(t);
    }
    res.atp_count = static_cast<int>(seen.size());
  }
  const long long bound =
      static_cast<long long>(res.atp_count) * res.atp_count;
  res.bound_ok = res.cover_plus <= bound && res.cover_minus <= bound;
  return res;
}

}  // namespace lrmso
