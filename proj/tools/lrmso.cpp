// lrmso — model checker and combinatorics toolkit for rank-bounded set
// logics over vertex-colored graphs.
//
// Exit codes: 0 success (or sentence true), 1 sentence false / selftest
// mismatch, 2 usage error, 3 input error, 4 enumeration cap exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrmso/lrmso.hpp"

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Plumbing

std::string read_text(const std::string& path) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw lrmso::Error(lrmso::ErrorCode::MalformedDocument,
                       "cannot open file: " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

lrmso::ColoredGraph load_graph(const std::string& path) {
  return lrmso::parse_graph(read_text(path));
}

lrmso::VertexSet to_set(int n, const std::vector<int>& vs,
                        const char* what = "vertex") {
  lrmso::VertexSet s(n);
  for (int v : vs) {
    if (v < 0 || v >= n)
      throw lrmso::Error(lrmso::ErrorCode::VertexOutOfRange,
                         std::string(what) + " index " + std::to_string(v) +
                             " out of range for n=" + std::to_string(n));
    s.add(v);
  }
  return s;
}

ordered_json set_json(const lrmso::VertexSet& s) {
  return ordered_json(s.members());
}

ordered_json seed_json(const lrmso::Seed& seed) {
  ordered_json parts = ordered_json::array();
  for (const auto& p : seed.parts) parts.push_back(set_json(p));
  return ordered_json{{"x_plus", set_json(seed.x_plus)},
                      {"x_minus", set_json(seed.x_minus)},
                      {"parts", parts}};
}

void emit(const ordered_json& j, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw lrmso::Error(lrmso::ErrorCode::MalformedDocument,
                       "cannot write file: " + out_path);
  out << j.dump(2) << "\n";
}

// The enumeration cap: an explicit --cap wins, then LRMSO_CAP, then the
// library default.
std::size_t resolve_cap(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LRMSO_CAP")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos != std::string(env).size() || v == 0)
        throw std::invalid_argument("trailing characters");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError("LRMSO_CAP",
                                 "must be a positive integer, got '" +
                                     std::string(env) + "'");
    }
  }
  return lrmso::LowrankCaps{}.suffix_cap;
}

int exit_for(lrmso::ErrorCode code) {
  switch (code) {
    case lrmso::ErrorCode::CapExceeded:
    case lrmso::ErrorCode::TooLarge:
      return 4;
    default:
      return 3;
  }
}

// ---------------------------------------------------------------------------
// Selftest: the embedded goldens for the worked 8-vertex example. Derived
// data (representative tables, arcs, suffix family, seeds) is frozen here and
// recomputed from scratch on every run.

int run_selftest() {
  using lrmso::VertexSet;
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok: " : "mismatch: ") << name << "\n";
    if (!ok) ++failures;
  };

  const lrmso::ColoredGraph fig = lrmso::gen_figure1();
  report("figure graph has 8 vertices and 11 edges",
         fig.n() == 8 && fig.edges().size() == 11);

  const auto hr = lrmso::build_h_digraph(fig, VertexSet::of(8, {2, 3}),
                                         VertexSet::of(8, {0, 1}), 2);
  report("half-pair is admissible at rank 2", hr.admissible);
  report("plus-representative table",
         hr.rep.phi_plus == std::vector<int>{-1, -1, 2, 3, -1, 2, 3, 3});
  report("minus-representative table",
         hr.rep.phi_minus == std::vector<int>{0, 1, -1, -1, 0, 0, 0, -1});
  report("arc count is 30", hr.h.arc_count() == 30);
  report("witness arc 5->6 present, reverse absent",
         hr.h.has_arc(5, 6) && !hr.h.has_arc(6, 5));

  const auto fam = lrmso::suffixes(hr.h);
  const std::vector<VertexSet> golden{
      VertexSet(8),
      VertexSet::full(8),
      VertexSet::of(8, {2, 3, 5, 6, 7}),
      VertexSet::of(8, {2, 3, 6, 7}),
      VertexSet::of(8, {2, 3, 7}),
  };
  report("suffix family is the golden five-set family", fam.sets == golden);

  const lrmso::Seed want_seed{VertexSet::of(8, {2, 3, 7}),
                              VertexSet::of(8, {0, 1, 4, 5}),
                              {VertexSet::of(8, {6})}};
  report("seed regenerated from tuple {6}",
         lrmso::seed_from_digraph(hr.h, {6}) == want_seed);

  const std::vector<int> params{2, 3, 0, 1};
  const auto sfs =
      lrmso::seed_for_suffix(hr.h, fig, params, VertexSet::of(8, {2, 3, 6, 7}));
  report("suffix {2,3,6,7} is seeded by tuple {6}",
         sfs.b == std::vector<int>{6} && sfs.seed == want_seed &&
             lrmso::span_contains(sfs.seed, VertexSet::of(8, {2, 3, 6, 7})));

  const char* coconn =
      "flip Comp k=0 symmetric { (eq=, adj=) ~ (eq=, adj=); }\n"
      "forall s . forall t . flipconn<Comp>(s,t;)";
  const auto doc = lrmso::logic::parse_document(coconn);
  report("complement of a 5-cycle is co-connected",
         lrmso::eval(lrmso::gen_complement_of_cycle(5), doc));
  report("complement of two 4-cycles is not co-connected",
         !lrmso::eval(lrmso::gen_complement_of_two_cycles(4, 4), doc));

  bool chain_ok = true;
  for (std::uint64_t seed = 1; seed <= 25 && chain_ok; ++seed) {
    const lrmso::ColoredGraph g = lrmso::gen_random(7, 0.5, seed);
    for (std::uint64_t mask = 0; mask < 128; mask += 13) {
      VertexSet x(7);
      for (int v = 0; v < 7; ++v)
        if (mask & (std::uint64_t{1} << v)) x.add(v);
      const auto m = lrmso::rank_measures(g, x);
      if (!(m.rk_f2 <= m.rk_q && 2 * m.rk_q <= m.dv &&
            m.dv <= (1 << (m.rk_f2 + 1))))
        chain_ok = false;
    }
  }
  report("rank measure chain on random cuts", chain_ok);

  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lrmso: rank-bounded set logic model checker and graph toolkit"};
  app.require_subcommand(1);

  // Shared option storage. Each subcommand binds the subset it uses.
  std::string graph_path, formula_path, spec_path, out_path;
  std::string strategy = "brute", method = "suffix", flip_name, family;
  std::vector<int> set_list, a_plus, a_minus, b_list, param_list;
  std::vector<double> family_args;
  int rank_bound = 0, threshold = 2, threads = 1, brute_cap = 16;
  std::optional<std::size_t> cap_flag;
  std::optional<std::uint64_t> gen_seed;
  bool trace = false;

  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cap", cap_flag,
                    "enumeration cap (default 1000000; LRMSO_CAP overrides)");
  };
  auto add_brute_cap = [&](CLI::App* cmd) {
    cmd->add_option("--brute-cap", brute_cap,
                    "vertex-count guard for exhaustive sweeps (default 16)");
  };

  auto* check = app.add_subcommand(
      "check", "evaluate a sentence on a graph (exit 0 true, 1 false)");
  check->add_option("graph", graph_path, "graph JSON file, or - for stdin")
      ->required();
  check->add_option("formula", formula_path, "formula file, or - for stdin")
      ->required();
  check->add_option("--strategy", strategy, "set-quantifier strategy")
      ->check(CLI::IsMember({"brute", "suffix"}));
  check->add_option("--threads", threads, "worker threads for the suffix sweep");
  check->add_flag("--trace", trace, "emit one JSON line per quantifier to stderr");
  add_cap(check);
  add_brute_cap(check);

  auto* rank = app.add_subcommand("rank", "rank measures of one cut");
  rank->add_option("graph", graph_path)->required();
  rank->add_option("--set", set_list, "vertex set, e.g. 0,1,2 (default empty)")
      ->delimiter(',');

  auto* enum_lr = app.add_subcommand(
      "enum-lowrank", "enumerate all sets of cutrank at most r");
  enum_lr->add_option("graph", graph_path)->required();
  enum_lr->add_option("-r,--rank", rank_bound, "cutrank bound")->required();
  enum_lr->add_option("--method", method, "enumeration method")
      ->check(CLI::IsMember({"brute", "suffix"}));
  enum_lr->add_option("--threads", threads, "worker threads (suffix method)");
  add_cap(enum_lr);
  add_brute_cap(enum_lr);

  auto* flip = app.add_subcommand("flip", "apply a declared flip to a graph");
  flip->add_option("graph", graph_path)->required();
  flip->add_option("--spec", spec_path, "flip declaration file")->required();
  flip->add_option("--name", flip_name, "declaration to apply")->required();
  flip->add_option("--params", param_list, "parameter vertices, e.g. 1,2")
      ->delimiter(',');

  auto* suff = app.add_subcommand(
      "suffixes", "suffix family of the composition digraph of a half-pair");
  suff->add_option("graph", graph_path)->required();
  suff->add_option("--a-plus", a_plus, "plus half, e.g. 2,3")->delimiter(',');
  suff->add_option("--a-minus", a_minus, "minus half, e.g. 0,1")
      ->delimiter(',');
  suff->add_option("-r,--rank", rank_bound, "cutrank bound")->required();
  add_cap(suff);

  auto* seed_cmd = app.add_subcommand(
      "seed", "seed generated by a tuple in a composition or flipped digraph");
  seed_cmd->add_option("graph", graph_path)->required();
  seed_cmd->add_option("--a-plus", a_plus, "plus half (digraph route)")
      ->delimiter(',');
  seed_cmd->add_option("--a-minus", a_minus, "minus half (digraph route)")
      ->delimiter(',');
  seed_cmd->add_option("-r,--rank", rank_bound, "cutrank bound (digraph route)");
  seed_cmd->add_option("--spec", spec_path, "flip declaration file (flip route)");
  seed_cmd->add_option("--name", flip_name, "declaration name (flip route)");
  seed_cmd->add_option("--params", param_list, "flip parameters (flip route)")
      ->delimiter(',');
  seed_cmd->add_option("--b", b_list, "generating tuple (default empty)")
      ->delimiter(',');

  auto* capture = app.add_subcommand(
      "capture", "separation capturing a cut against a frequency threshold");
  capture->add_option("graph", graph_path)->required();
  capture->add_option("--set", set_list, "the cut side X")->delimiter(',');
  capture->add_option("-t,--threshold", threshold,
                      "class-multiplicity threshold (default 2)");

  auto* vc = app.add_subcommand(
      "vc", "VC dimension of the neighborhood set system");
  vc->add_option("graph", graph_path)->required();

  auto* gen = app.add_subcommand("gen", "emit a generated graph as JSON");
  gen->add_option("family", family,
                  "path | cycle | complement_of_cycle | "
                  "complement_of_two_cycles | biclique | random | figure1")
      ->required();
  gen->add_option("args", family_args, "family arguments, e.g. 6 or 6 0.5");
  gen->add_option("--seed", gen_seed, "PRNG seed (required for random)");
  gen->add_option("-o,--out", out_path, "output file (default stdout)");

  app.add_subcommand("selftest",
                     "recompute the embedded worked-example goldens");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      const lrmso::ColoredGraph g = load_graph(graph_path);
      const auto doc = lrmso::logic::parse_document(read_text(formula_path));
      lrmso::logic::check_document(doc);
      lrmso::EvalConfig cfg;
      cfg.strategy = strategy == "suffix" ? lrmso::LowrankStrategy::Suffix
                                          : lrmso::LowrankStrategy::Brute;
      cfg.subset_cap = brute_cap;
      cfg.suffix_cap = resolve_cap(cap_flag);
      cfg.threads = threads;
      cfg.trace = trace;
      cfg.trace_out = trace ? &std::cerr : nullptr;
      const bool result = lrmso::eval(g, doc, {}, cfg);
      emit(ordered_json{{"result", result}}, "");
      return result ? 0 : 1;
    }

    if (rank->parsed()) {
      const lrmso::ColoredGraph g = load_graph(graph_path);
      const auto m = lrmso::rank_measures(g, to_set(g.n(), set_list));
      emit(ordered_json{{"rk_f2", m.rk_f2}, {"rk_q", m.rk_q}, {"dv", m.dv}},
           "");
      return 0;
    }

    if (enum_lr->parsed()) {
      const lrmso::ColoredGraph g = load_graph(graph_path);
      lrmso::SuffixFamily fam;
      if (method == "brute") {
        fam = lrmso::brute_lowrank(g, rank_bound, brute_cap);
      } else {
        lrmso::LowrankCaps caps;
        caps.n_cap = brute_cap;
        caps.suffix_cap = resolve_cap(cap_flag);
        fam = lrmso::lowrank_via_suffixes(g, rank_bound, caps, threads);
      }
      ordered_json out = ordered_json::array();
      for (std::size_t i = 0; i < fam.sets.size(); ++i)
        out.push_back(ordered_json{{"set", set_json(fam.sets[i])},
                                   {"source", fam.source[i]}});
      emit(out, "");
      return 0;
    }

    if (flip->parsed()) {
      const lrmso::ColoredGraph g = load_graph(graph_path);
      const auto specs = lrmso::logic::parse_flipspecs(read_text(spec_path));
      const lrmso::FlipSpec* spec = nullptr;
      for (const auto& s : specs)
        if (s.name == flip_name) spec = &s;
      if (!spec)
        throw lrmso::Error(lrmso::ErrorCode::UnknownFlipSpec,
                           "no declaration named '" + flip_name + "' in " +
                               spec_path);
      const lrmso::Digraph h = lrmso::apply_flip(g, *spec, param_list);
      ordered_json arcs = ordered_json::array();
      for (auto [u, v] : h.arcs()) arcs.push_back(ordered_json{u, v});
      emit(ordered_json{{"n", h.n()}, {"arcs", arcs}}, "");
      return 0;
    }

    if (suff->parsed()) {
      const lrmso::ColoredGraph g = load_graph(graph_path);
      const auto hr =
          lrmso::build_h_digraph(g, to_set(g.n(), a_plus, "plus-half"),
                                 to_set(g.n(), a_minus, "minus-half"),
                                 rank_bound);
      const auto fam = lrmso::suffixes(hr.h, resolve_cap(cap_flag));
      ordered_json sets = ordered_json::array();
      for (const auto& s : fam.sets) sets.push_back(set_json(s));
      emit(ordered_json{{"admissible", hr.admissible}, {"suffixes", sets}},
           "");
      return 0;
    }

    if (seed_cmd->parsed()) {
      const lrmso::ColoredGraph g = load_graph(graph_path);
      const bool digraph_route = !a_plus.empty() || !a_minus.empty();
      const bool flip_route = !spec_path.empty();
      if (digraph_route == flip_route)
        throw CLI::ValidationError(
            "seed", "give either --a-plus/--a-minus/-r or --spec/--name");
      lrmso::Seed seed;
      if (digraph_route) {
        const auto hr =
            lrmso::build_h_digraph(g, to_set(g.n(), a_plus, "plus-half"),
                                   to_set(g.n(), a_minus, "minus-half"),
                                   rank_bound);
        seed = lrmso::seed_from_digraph(hr.h, b_list);
      } else {
        const auto specs = lrmso::logic::parse_flipspecs(read_text(spec_path));
        const lrmso::FlipSpec* spec = nullptr;
        for (const auto& s : specs)
          if (s.name == flip_name) spec = &s;
        if (!spec)
          throw lrmso::Error(lrmso::ErrorCode::UnknownFlipSpec,
                             "no declaration named '" + flip_name + "' in " +
                                 spec_path);
        seed = lrmso::seed_from_params(g, *spec, param_list, b_list);
      }
      emit(seed_json(seed), "");
      return 0;
    }

    if (capture->parsed()) {
      const lrmso::ColoredGraph g = load_graph(graph_path);
      const auto sep =
          lrmso::capture_separation(g, to_set(g.n(), set_list), threshold);
      emit(ordered_json{{"left", set_json(sep.left)},
                        {"right", set_json(sep.right)},
                        {"order", sep.order()}},
           "");
      return 0;
    }

    if (vc->parsed()) {
      const lrmso::ColoredGraph g = load_graph(graph_path);
      emit(ordered_json{{"vc", lrmso::vc_dimension(g)}}, "");
      return 0;
    }

    if (gen->parsed()) {
      const lrmso::ColoredGraph g = lrmso::generate(
          family, family_args, gen_seed.has_value(), gen_seed.value_or(0));
      if (out_path.empty() || out_path == "-") {
        std::cout << lrmso::emit_graph(g);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
          throw lrmso::Error(lrmso::ErrorCode::MalformedDocument,
                             "cannot write file: " + out_path);
        out << lrmso::emit_graph(g);
      }
      return 0;
    }

    return run_selftest();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lrmso::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
