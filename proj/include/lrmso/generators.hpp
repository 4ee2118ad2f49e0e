#pragma once

// Built-in graph families used by the CLI and the test corpus.
// `random` uses splitmix64 so runs are reproducible across platforms:
//   state += 0x9e3779b97f4a7c15; z = state;
//   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
//   z = z ^ (z >> 31);
// Edge {u,v} (u < v, ascending) is present iff (next() >> 11) < floor(p * 2^53).

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "lrmso/errors.hpp"
#include "lrmso/graph.hpp"

namespace lrmso {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

inline ColoredGraph gen_path(int n) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "path: n must be >= 0");
  ColoredGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline ColoredGraph gen_cycle(int n) {
  if (n < 3) throw Error(ErrorCode::BadParameter, "cycle: n must be >= 3");
  ColoredGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline ColoredGraph complement_of(const ColoredGraph& g) {
  ColoredGraph h(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

inline ColoredGraph gen_complement_of_cycle(int n) {
  return complement_of(gen_cycle(n));
}

// Complement of the disjoint union C_{n1} + C_{n2}; vertices of the second
// cycle are offset by n1.
inline ColoredGraph gen_complement_of_two_cycles(int n1, int n2) {
  if (n1 < 3 || n2 < 3)
    throw Error(ErrorCode::BadParameter,
                "complement_of_two_cycles: both sizes must be >= 3");
  ColoredGraph base(n1 + n2);
  for (int i = 0; i < n1; ++i) base.add_edge(i, (i + 1) % n1);
  for (int i = 0; i < n2; ++i) base.add_edge(n1 + i, n1 + (i + 1) % n2);
  return complement_of(base);
}

inline ColoredGraph gen_biclique(int s, int t) {
  if (s < 1 || t < 1)
    throw Error(ErrorCode::BadParameter, "biclique: sides must be >= 1");
  ColoredGraph g(s + t);
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < t; ++v) g.add_edge(u, s + v);
  return g;
}

inline ColoredGraph gen_random(int n, double p, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "random: n must be >= 0");
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorCode::BadParameter, "random: p must be in [0,1]");
  ColoredGraph g(n);
  SplitMix64 rng(seed);
  const auto threshold =
      static_cast<std::uint64_t>(std::floor(p * 9007199254740992.0));  // 2^53
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((rng.next() >> 11) < threshold) g.add_edge(u, v);
  return g;
}

// Fixed 8-vertex worked example with colored parameter classes.
// Vertex indices: a1m=0, a2m=1, a1p=2, a2p=3, w1=4, w2=5, w3=6, w4=7.
inline ColoredGraph gen_figure1() {
  ColoredGraph g(8);
  const int a1m = 0, a2m = 1, a1p = 2, a2p = 3;
  const int w1 = 4, w2 = 5, w3 = 6, w4 = 7;
  g.add_edge(a1p, w1);
  g.add_edge(a1p, w2);
  g.add_edge(a1p, w3);
  g.add_edge(a1m, w2);
  g.add_edge(a2m, w2);
  g.add_edge(a2m, w3);
  g.add_edge(a2m, w4);
  g.add_edge(a1p, a1m);
  g.add_edge(a1p, a2m);
  g.add_edge(a2p, a2m);
  g.add_edge(w1, w2);
  g.set_color("Aplus", VertexSet::of(8, {a1p, a2p}));
  g.set_color("Aminus", VertexSet::of(8, {a1m, a2m}));
  return g;
}

// Dispatcher used by the CLI `gen` subcommand. `args` are the positional
// numeric arguments after the family name; `seed` applies to random only.
inline ColoredGraph generate(const std::string& family,
                             const std::vector<double>& args,
                             bool has_seed = false, std::uint64_t seed = 0) {
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw Error(ErrorCode::BadParameter,
                  family + ": expected " + std::to_string(k) + " argument(s)");
  };
  auto as_int = [&](double x) {
    int v = static_cast<int>(x);
    if (static_cast<double>(v) != x)
      throw Error(ErrorCode::BadParameter, family + ": integer argument required");
    return v;
  };
  if (family == "path") {
    want(1);
    return gen_path(as_int(args[0]));
  }
  if (family == "cycle") {
    want(1);
    return gen_cycle(as_int(args[0]));
  }
  if (family == "complement_of_cycle") {
    want(1);
    return gen_complement_of_cycle(as_int(args[0]));
  }
  if (family == "complement_of_two_cycles") {
    want(2);
    return gen_complement_of_two_cycles(as_int(args[0]), as_int(args[1]));
  }
  if (family == "biclique") {
    want(2);
    return gen_biclique(as_int(args[0]), as_int(args[1]));
  }
  if (family == "random") {
    want(2);
    if (!has_seed)
      throw Error(ErrorCode::BadParameter, "random: a seed is required");
    return gen_random(as_int(args[0]), args[1], seed);
  }
  if (family == "figure1") {
    want(0);
    return gen_figure1();
  }
  throw Error(ErrorCode::UnknownFamily, "unknown family: " + family);
}

}  // namespace lrmso
