#pragma once

// Model checker for the logic family. Vertex quantifiers loop over V(G);
// rank-bounded set quantifiers draw candidates either from the brute-force
// subset filter (Brute) or from the suffix sweep (Suffix) — the two must
// agree. conn(s,t;ā) is false when an endpoint is avoided, true when s = t
// unavoided, else a BFS that never enters ā. flipconn/flipreach materialize
// the flip (memoized per spec name + parameters) and test connectivity /
// reachability, both reflexive.

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lrmso/errors.hpp"
#include "lrmso/flip.hpp"
#include "lrmso/graph.hpp"
#include "lrmso/logic/ast.hpp"
#include "lrmso/lowrank.hpp"
#include "lrmso/vertex_set.hpp"

namespace lrmso {

enum class LowrankStrategy { Brute, Suffix };

struct EvalConfig {
  LowrankStrategy strategy = LowrankStrategy::Brute;
  int subset_cap = 16;               // vertex-count guard for enumerations
  std::size_t suffix_cap = 1000000;  // suffix enumeration guard
  bool trace = false;
  std::ostream* trace_out = nullptr;  // JSON lines, one per quantifier
  int threads = 1;                    // parallelism of the suffix sweep only
};

struct Assignment {
  std::map<std::string, int> vertex;
  std::map<std::string, VertexSet> sets;
};

class Evaluator {
 public:
  Evaluator(const ColoredGraph& g, const logic::FormulaDocument& doc,
            EvalConfig cfg = {})
      : g_(g), doc_(doc), cfg_(cfg) {}

  bool eval(Assignment asg = {}) { return eval_node(*doc_.root, asg); }

 private:
  using F = logic::Formula;
  using K = logic::Kind;

  int vertex_value(const std::string& var, const Assignment& asg) const {
    auto it = asg.vertex.find(var);
    if (it == asg.vertex.end())
      throw Error(ErrorCode::UnboundVariable,
                  "vertex variable '" + var + "' has no value");
    return it->second;
  }

  const VertexSet& set_value(const std::string& var,
                             const Assignment& asg) const {
    auto it = asg.sets.find(var);
    if (it == asg.sets.end())
      throw Error(ErrorCode::UnboundVariable,
                  "set variable '" + var + "' has no value");
    return it->second;
  }

  void trace_quant(const F& f, bool result, int witness,
                   const VertexSet* set_witness) {
    if (!cfg_.trace || !cfg_.trace_out) return;
    nlohmann::ordered_json j;
    switch (f.kind) {
      case K::ExistsVertex: j["quant"] = "exists"; break;
      case K::ForallVertex: j["quant"] = "forall"; break;
      case K::ExistsSet: j["quant"] = "existsSet"; break;
      case K::ForallSet: j["quant"] = "forallSet"; break;
      default: return;
    }
    j["var"] = f.name;
    if (f.kind == K::ExistsSet || f.kind == K::ForallSet) j["rank"] = f.rank;
    j["result"] = result;
    if (result && f.kind == K::ExistsVertex && witness >= 0)
      j["witness"] = witness;
    if (result && f.kind == K::ExistsSet && set_witness)
      j["witness"] = set_witness->members();
    *cfg_.trace_out << j.dump() << "\n";
  }

  // Candidate sets for a rank-r quantifier, cached per (strategy, r).
  std::shared_ptr<const std::vector<VertexSet>> candidates(int r) {
    const auto key = std::make_pair(static_cast<int>(cfg_.strategy), r);
    {
      std::lock_guard<std::mutex> lk(cache_mu_);
      auto it = cand_cache_.find(key);
      if (it != cand_cache_.end()) return it->second;
    }
    SuffixFamily fam =
        cfg_.strategy == LowrankStrategy::Brute
            ? brute_lowrank(g_, r, cfg_.subset_cap)
            : lowrank_via_suffixes(
                  g_, r, LowrankCaps{cfg_.subset_cap, cfg_.suffix_cap},
                  cfg_.threads);
    auto sets =
        std::make_shared<const std::vector<VertexSet>>(std::move(fam.sets));
    std::lock_guard<std::mutex> lk(cache_mu_);
    return cand_cache_.emplace(key, std::move(sets)).first->second;
  }

  std::shared_ptr<const Digraph> flip_for(const F& f, const Assignment& asg,
                                          std::vector<int>& params_out) {
    const FlipSpec* spec = doc_.find_spec(f.name);
    if (!spec)
      throw Error(ErrorCode::UnknownFlipSpec,
                  "unknown flip spec '" + f.name + "'");
    if (static_cast<int>(f.args.size()) - 2 != spec->k)
      throw Error(ErrorCode::ArityMismatch,
                  "flip spec '" + f.name + "' expects " +
                      std::to_string(spec->k) + " parameter(s)");
    if (f.kind == K::FlipConn && !spec->symmetric)
      throw Error(ErrorCode::SymmetryRequired,
                  "flipconn requires a symmetric flip spec");
    std::vector<int> params;
    for (std::size_t i = 2; i < f.args.size(); ++i)
      params.push_back(vertex_value(f.args[i], asg));
    params_out = params;
    const auto key = std::make_pair(f.name, params);
    {
      std::lock_guard<std::mutex> lk(cache_mu_);
      auto it = flip_cache_.find(key);
      if (it != flip_cache_.end()) return it->second;
    }
    auto h = std::make_shared<const Digraph>(apply_flip(g_, *spec, params));
    std::lock_guard<std::mutex> lk(cache_mu_);
    return flip_cache_.emplace(key, std::move(h)).first->second;
  }

  bool eval_conn(const F& f, const Assignment& asg) const {
    const int s = vertex_value(f.args[0], asg);
    const int t = vertex_value(f.args[1], asg);
    VertexSet avoid(g_.n());
    for (std::size_t i = 2; i < f.args.size(); ++i)
      avoid.add(vertex_value(f.args[i], asg));
    if (avoid.contains(s) || avoid.contains(t)) return false;
    if (s == t) return true;
    // BFS in G minus the avoided vertices.
    VertexSet seen(g_.n());
    seen.add(s);
    std::vector<int> queue{s};
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      VertexSet next = g_.neighbors(u).minus(avoid).minus(seen);
      if (next.contains(t)) return true;
      for (int v = next.first(); v >= 0; v = next.next(v + 1)) {
        seen.add(v);
        queue.push_back(v);
      }
    }
    return false;
  }

  bool eval_node(const F& f, Assignment& asg) {
    switch (f.kind) {
      case K::ExistsVertex:
      case K::ForallVertex: {
        const bool is_exists = f.kind == K::ExistsVertex;
        // Save any shadowed outer binding of the same name.
        auto shadowed = asg.vertex.find(f.name);
        const bool had = shadowed != asg.vertex.end();
        const int old = had ? shadowed->second : -1;
        bool result = !is_exists;
        int witness = -1;
        for (int v = 0; v < g_.n(); ++v) {
          asg.vertex[f.name] = v;
          if (eval_node(*f.children[0], asg) == is_exists) {
            result = is_exists;
            witness = v;
            break;
          }
        }
        if (had)
          asg.vertex[f.name] = old;
        else
          asg.vertex.erase(f.name);
        trace_quant(f, result, result == is_exists ? witness : -1, nullptr);
        return result;
      }
      case K::ExistsSet:
      case K::ForallSet: {
        const bool is_exists = f.kind == K::ExistsSet;
        auto cands = candidates(f.rank);
        auto shadowed = asg.sets.find(f.name);
        const bool had = shadowed != asg.sets.end();
        const VertexSet old = had ? shadowed->second : VertexSet(0);
        bool result = !is_exists;
        const VertexSet* witness = nullptr;
        for (const VertexSet& x : *cands) {
          asg.sets.insert_or_assign(f.name, x);
          if (eval_node(*f.children[0], asg) == is_exists) {
            result = is_exists;
            witness = &x;
            break;
          }
        }
        if (had)
          asg.sets.insert_or_assign(f.name, old);
        else
          asg.sets.erase(f.name);
        trace_quant(f, result, -1, witness);
        return result;
      }
      case K::And:
        return eval_node(*f.children[0], asg) && eval_node(*f.children[1], asg);
      case K::Or:
        return eval_node(*f.children[0], asg) || eval_node(*f.children[1], asg);
      case K::Implies:
        return !eval_node(*f.children[0], asg) ||
               eval_node(*f.children[1], asg);
      case K::Not:
        return !eval_node(*f.children[0], asg);
      case K::Edge:
        return g_.has_edge(vertex_value(f.args[0], asg),
                           vertex_value(f.args[1], asg));
      case K::Eq:
        return vertex_value(f.args[0], asg) ==
               vertex_value(f.args[1], asg);
      case K::Color:
        return g_.color(f.name).contains(vertex_value(f.args[0], asg));
      case K::In:
        return set_value(f.name, asg)
            .contains(vertex_value(f.args[0], asg));
      case K::Conn:
        return eval_conn(f, asg);
      case K::FlipConn:
      case K::FlipReach: {
        std::vector<int> params;
        auto h = flip_for(f, asg, params);
        const int s = vertex_value(f.args[0], asg);
        const int t = vertex_value(f.args[1], asg);
        return h->reachable_from(s).contains(t);  // reflexive by definition
      }
    }
    throw Error(ErrorCode::MalformedDocument, "unknown formula node");
  }

  const ColoredGraph& g_;
  const logic::FormulaDocument& doc_;
  EvalConfig cfg_;

  std::mutex cache_mu_;
  std::map<std::pair<std::string, std::vector<int>>,
           std::shared_ptr<const Digraph>>
      flip_cache_;
  std::map<std::pair<int, int>, std::shared_ptr<const std::vector<VertexSet>>>
      cand_cache_;
};

inline bool eval(const ColoredGraph& g, const logic::FormulaDocument& doc,
                 const Assignment& asg = {}, const EvalConfig& cfg = {}) {
  Evaluator e(g, doc, cfg);
  return e.eval(asg);
}

}  // namespace lrmso
