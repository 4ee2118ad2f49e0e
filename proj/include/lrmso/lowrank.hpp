#pragma once

// Enumeration of low-rank vertex sets, two independent ways:
//  - brute_lowrank filters all 2^n subsets by cutrank (the oracle);
//  - lowrank_via_suffixes sweeps every ordered pair of disjoint nonempty
//    parameter halves of size <= 2^r, collects the suffixes (up-closed sets)
//    of each auxiliary digraph H, and adds the trivial sets ∅ and V.
// The two must agree exactly — the structural fact the whole library leans
// on. Enumerations never truncate silently: a cap overrun is an error.

#include <algorithm>
#include <bit>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lrmso/errors.hpp"
#include "lrmso/graph.hpp"
#include "lrmso/hgraph.hpp"
#include "lrmso/rank.hpp"
#include "lrmso/scc.hpp"
#include "lrmso/vertex_set.hpp"

namespace lrmso {

struct SuffixFamily {
  std::vector<VertexSet> sets;      // canonical order (VertexSet::operator<)
  std::vector<std::string> source;  // parallel provenance, for debugging
};

struct LowrankCaps {
  int n_cap = 16;                    // vertex-count guard (TooLarge)
  std::size_t suffix_cap = 1000000;  // per-enumeration guard (CapExceeded)
};

// All up-closed sets of H: a suffix contains, with every vertex, everything
// its arcs point to. Suffixes are exactly unions of condensation components
// closed under reachability, so we decide components sinks-first (component
// indices are a reverse topological order) and admit a component only when
// all its successors are already in.
inline SuffixFamily suffixes(const Digraph& h,
                             std::size_t cap = LowrankCaps{}.suffix_cap) {
  SccCondensation c = condense(h);
  const int m = c.comp_count;
  SuffixFamily fam;
  VertexSet chosen(m);

  auto emit = [&](const VertexSet& comps) {
    if (fam.sets.size() >= cap)
      throw Error(ErrorCode::CapExceeded,
                  "suffix enumeration exceeded cap of " + std::to_string(cap));
    VertexSet s(h.n());
    for (int i = comps.first(); i >= 0; i = comps.next(i + 1))
      s |= c.members[i];
    fam.sets.push_back(s);
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      emit(chosen);
      return;
    }
    self(self, i + 1);  // i stays out
    if (c.dag_out[i].subset_of(chosen)) {
      chosen.add(i);
      self(self, i + 1);
      chosen.remove(i);
    }
  };
  rec(rec, 0);

  std::sort(fam.sets.begin(), fam.sets.end());
  fam.source.assign(fam.sets.size(), "");
  return fam;
}

inline bool is_suffix(const Digraph& h, const VertexSet& x) {
  for (auto [u, v] : h.arcs())
    if (x.contains(u) && !x.contains(v)) return false;
  return true;
}

inline SuffixFamily brute_lowrank(const ColoredGraph& g, int r,
                                  int n_cap = LowrankCaps{}.n_cap) {
  const int n = g.n();
  if (n > n_cap)
    throw Error(ErrorCode::TooLarge, "brute enumeration capped at n = " +
                                         std::to_string(n_cap));
  SuffixFamily fam;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet x(n);
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint64_t{1} << v)) x.add(v);
    if (cutrank(g, x) <= r) fam.sets.push_back(x);
  }
  std::sort(fam.sets.begin(), fam.sets.end());
  fam.source.assign(fam.sets.size(), "brute");
  return fam;
}

// All ordered pairs of disjoint nonempty vertex sets with both sizes <= 2^r,
// in a fixed deterministic order. Repetition-invariance of the H
// construction makes set pairs equivalent to length-2·2^r tuples.
inline std::vector<std::pair<VertexSet, VertexSet>> enumerate_half_pairs(
    int n, int r) {
  if (n > 32)
    throw Error(ErrorCode::TooLarge, "half-pair sweep capped at n = 32");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const int half_cap = r >= 30 ? n : std::min<long long>(n, 1LL << r);
  auto from_mask = [&](std::uint64_t mask) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint64_t{1} << v)) s.add(v);
    return s;
  };
  std::vector<std::pair<VertexSet, VertexSet>> pairs;
  for (std::uint64_t ap = 1; ap <= full; ++ap) {
    if (std::popcount(ap) > half_cap) continue;
    const std::uint64_t rest = full & ~ap;
    // submask iteration over the complement, descending
    for (std::uint64_t am = rest; am != 0; am = (am - 1) & rest) {
      if (std::popcount(am) > half_cap) continue;
      pairs.emplace_back(from_mask(ap), from_mask(am));
    }
  }
  return pairs;
}

inline SuffixFamily lowrank_via_suffixes(const ColoredGraph& g, int r,
                                         const LowrankCaps& caps = {},
                                         int threads = 1) {
  const int n = g.n();
  if (n > caps.n_cap)
    throw Error(ErrorCode::TooLarge, "suffix sweep capped at n = " +
                                         std::to_string(caps.n_cap));
  auto pairs = enumerate_half_pairs(n, r);

  using Batch = std::vector<std::pair<VertexSet, std::string>>;
  auto run_range = [&](std::size_t lo, std::size_t hi, Batch& out) {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& [ap, am] = pairs[i];
      HResult hr = build_h_digraph(g, ap, am, r);
      SuffixFamily fs = suffixes(hr.h, caps.suffix_cap);
      std::string prov = "a_plus=" + ap.str() + " a_minus=" + am.str();
      for (const auto& s : fs.sets)
        if (seen.insert(s).second) out.emplace_back(s, prov);
    }
  };

  const int nt = std::max(1, threads);
  std::vector<Batch> batches(nt);
  if (nt == 1) {
    run_range(0, pairs.size(), batches[0]);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr fail;
    std::mutex fail_mu;
    const std::size_t chunk = (pairs.size() + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
      std::size_t lo = std::min(pairs.size(), t * chunk);
      std::size_t hi = std::min(pairs.size(), lo + chunk);
      pool.emplace_back([&, lo, hi, t] {
        try {
          run_range(lo, hi, batches[t]);
        } catch (...) {
          std::lock_guard<std::mutex> lk(fail_mu);
          if (!fail) fail = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (fail) std::rethrow_exception(fail);
  }

  // Merge in sweep order so provenance is independent of the thread count;
  // the trivial sets are always present.
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<std::pair<VertexSet, std::string>> merged;
  merged.emplace_back(VertexSet(n), "trivial");
  seen.insert(VertexSet(n));
  if (seen.insert(VertexSet::full(n)).second)
    merged.emplace_back(VertexSet::full(n), "trivial");
  for (const auto& b : batches)
    for (const auto& [s, prov] : b)
      if (seen.insert(s).second) merged.emplace_back(s, prov);

  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SuffixFamily fam;
  for (auto& [s, prov] : merged) {
    fam.sets.push_back(s);
    fam.source.push_back(std::move(prov));
  }
  return fam;
}

}  // namespace lrmso
