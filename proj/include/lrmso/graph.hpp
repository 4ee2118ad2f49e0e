#pragma once

// ColoredGraph: undirected simple graph with named unary color predicates.
// Digraph: directed graph without self-loops; antiparallel arcs allowed.
// Both keep adjacency as per-vertex bit-vectors and are immutable by
// convention once built (construction helpers mutate, algorithms never do).
//
// Graph JSON schema:
//   {"n": int, "edges": [[u,v], ...], "colors": {"Name": [indices], ...}}
// Emission sorts edges and color indices so round-trips are bit-exact.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lrmso/errors.hpp"
#include "lrmso/vertex_set.hpp"

namespace lrmso {

class ColoredGraph {
 public:
  ColoredGraph() = default;

  explicit ColoredGraph(int n) : n_(n), adj_(n, VertexSet(n)) {
    if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
  }

  int n() const { return n_; }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside [0," +
                      std::to_string(n_) + ")");
  }

  // Symmetric insertion; duplicates merge silently, self-loops are rejected.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
    adj_[u].add(v);
    adj_[v].add(u);
  }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    return adj_[u].contains(v);
  }

  const VertexSet& neighbors(int v) const { return adj_[v]; }

  int edge_count() const {
    int deg_sum = 0;
    for (const VertexSet& nb : adj_) deg_sum += nb.count();
    return deg_sum / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
        out.emplace_back(u, v);
    return out;
  }

  // Colors are open-world: a vertex may be in several colors or in none.
  void set_color(const std::string& name, VertexSet members) {
    if (members.universe() != n_)
      throw Error(ErrorCode::BadParameter,
                  "color universe mismatch for '" + name + "'");
    colors_[name] = std::move(members);
  }

  bool has_color(const std::string& name) const {
    return colors_.count(name) > 0;
  }

  // Missing colors behave as the empty predicate.
  VertexSet color(const std::string& name) const {
    auto it = colors_.find(name);
    return it == colors_.end() ? VertexSet(n_) : it->second;
  }

  const std::map<std::string, VertexSet>& colors() const { return colors_; }

  // Sorted list of color names a vertex belongs to (part of atomic types).
  std::vector<std::string> colors_of(int v) const {
    std::vector<std::string> out;
    for (const auto& [name, members] : colors_)
      if (members.contains(v)) out.push_back(name);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::map<std::string, VertexSet> colors_;
};

class Digraph {
 public:
  Digraph() = default;

  explicit Digraph(int n) : n_(n), out_(n, VertexSet(n)), in_(n, VertexSet(n)) {
    if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
  }

  int n() const { return n_; }

  void add_arc(int u, int v) {
    if (u == v)
      throw Error(ErrorCode::SelfLoop, "self-arc at vertex " + std::to_string(u));
    out_[u].add(v);
    in_[v].add(u);
  }

  bool has_arc(int u, int v) const {
    if (u == v) return false;
    return out_[u].contains(v);
  }

  const VertexSet& out(int v) const { return out_[v]; }
  const VertexSet& in(int v) const { return in_[v]; }

  int arc_count() const {
    int c = 0;
    for (const VertexSet& s : out_) c += s.count();
    return c;
  }

  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = out_[u].first(); v >= 0; v = out_[u].next(v + 1))
        out.emplace_back(u, v);
    return out;
  }

  bool symmetric() const {
    for (int u = 0; u < n_; ++u)
      if (!(out_[u] == in_[u])) return false;
    return true;
  }

  // Forward closure of s, including s itself (reachability is reflexive).
  VertexSet reachable_from(int s) const {
    VertexSet seen(n_);
    seen.add(s);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next(n_);
      for (int v = frontier.first(); v >= 0; v = frontier.next(v + 1))
        next |= out_[v];
      frontier = next.minus(seen);
      seen |= frontier;
    }
    return seen;
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

// Collapses a symmetric digraph back into an undirected graph; the caller
// vouches for symmetry (asserted).
inline ColoredGraph to_undirected(const Digraph& d) {
  if (!d.symmetric())
    throw Error(ErrorCode::AsymmetricSpecUsedAsSymmetric,
                "digraph is not symmetric");
  ColoredGraph g(d.n());
  for (auto [u, v] : d.arcs())
    if (u < v) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// JSON serialization.

inline ColoredGraph parse_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") ||
      !doc["n"].is_number_integer())
    throw Error(ErrorCode::MalformedDocument,
                "expected object with integer field 'n'");
  long long n = doc["n"].get<long long>();
  if (n < 0)
    throw Error(ErrorCode::MalformedDocument, "'n' must be nonnegative");

  ColoredGraph g(static_cast<int>(n));

  if (doc.contains("edges")) {
    if (!doc["edges"].is_array())
      throw Error(ErrorCode::MalformedDocument, "'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw Error(ErrorCode::MalformedDocument,
                    "each edge must be a pair of integers");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
  }

  if (doc.contains("colors")) {
    if (!doc["colors"].is_object())
      throw Error(ErrorCode::MalformedDocument, "'colors' must be an object");
    for (const auto& [name, arr] : doc["colors"].items()) {
      if (!arr.is_array())
        throw Error(ErrorCode::MalformedDocument,
                    "color '" + name + "' must map to an index array");
      VertexSet members(g.n());
      for (const auto& idx : arr) {
        if (!idx.is_number_integer())
          throw Error(ErrorCode::MalformedDocument,
                      "color '" + name + "' has a non-integer index");
        int v = idx.get<int>();
        g.check_vertex(v);
        members.add(v);
      }
      g.set_color(name, std::move(members));
    }
  }
  return g;
}

inline std::string emit_graph(const ColoredGraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.n();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  auto colors = nlohmann::ordered_json::object();
  for (const auto& [name, members] : g.colors())
    colors[name] = members.members();
  doc["colors"] = std::move(colors);
  return doc.dump();
}

inline std::string emit_digraph(const Digraph& d) {
  nlohmann::ordered_json doc;
  doc["n"] = d.n();
  auto arcs = nlohmann::ordered_json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
  doc["arcs"] = std::move(arcs);
  return doc.dump();
}

}  // namespace lrmso
