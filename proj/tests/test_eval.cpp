#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "lrmso/compile.hpp"
#include "lrmso/errors.hpp"
#include "lrmso/eval.hpp"
#include "lrmso/generators.hpp"
#include "lrmso/graph.hpp"
#include "lrmso/logic/parser.hpp"
#include "lrmso/logic/validate.hpp"
#include "lrmso/vertex_set.hpp"
#include "oracles.hpp"

using lrmso::Assignment;
using lrmso::ColoredGraph;
using lrmso::Error;
using lrmso::ErrorCode;
using lrmso::EvalConfig;
using lrmso::LowrankStrategy;
using lrmso::VertexSet;
using lrmso::logic::parse_document;

namespace {

bool eval_text(const ColoredGraph& g, const std::string& text,
               const Assignment& asg = {}, const EvalConfig& cfg = {}) {
  return lrmso::eval(g, parse_document(text), asg, cfg);
}

// Evaluates under both candidate-set strategies and insists they agree.
bool both_strategies(const ColoredGraph& g, const std::string& text,
                     const Assignment& asg = {}) {
  auto doc = parse_document(text);
  EvalConfig brute;
  brute.strategy = LowrankStrategy::Brute;
  EvalConfig suffix;
  suffix.strategy = LowrankStrategy::Suffix;
  const bool b = lrmso::eval(g, doc, asg, brute);
  const bool s = lrmso::eval(g, doc, asg, suffix);
  CHECK(b == s);
  return b;
}

const char* kSeparation =
    "existsSet X : 1 . (forall x . (A(x) -> x in X)) /\\ (forall y . (C(y) -> "
    "~(y in X)))";

const char* kCoConnectivity =
    "flip Comp k=0 symmetric { (eq=, adj=) ~ (eq=, adj=); }\n"
    "forall s . forall t . flipconn<Comp>(s,t;)";

std::string separation_at_rank(int r) {
  std::string s = kSeparation;
  s.replace(s.find(": 1"), 3, ": " + std::to_string(r));
  return s;
}

}  // namespace

TEST_CASE("connectivity atom conventions") {
  ColoredGraph p4 = lrmso::gen_path(4);
  auto doc = parse_document("conn(s,t; a)");
  auto at = [&](int s, int t, int a) {
    Assignment asg;
    asg.vertex = {{"s", s}, {"t", t}, {"a", a}};
    return lrmso::eval(p4, doc, asg);
  };
  // An avoided endpoint makes the atom false even when s == t.
  CHECK_FALSE(at(0, 0, 0));
  CHECK(at(0, 0, 3));
  // Interior vertices are cut vertices of the path.
  CHECK_FALSE(at(0, 3, 1));
  CHECK_FALSE(at(0, 3, 2));
  CHECK(at(0, 2, 3));
  // Empty avoid list.
  auto plain = parse_document("conn(s,t;)");
  Assignment asg;
  asg.vertex = {{"s", 0}, {"t", 3}};
  CHECK(lrmso::eval(p4, plain, asg));
}

TEST_CASE("connectivity agrees with a recursive path oracle") {
  auto doc = parse_document("conn(s,t; a,b)");
  oracle::Mix64 rng{0x5eedc0de};
  int checked = 0;
  for (int n = 2; n <= 7; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      ColoredGraph g = lrmso::gen_random(n, 0.45, rng.next());
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          const int a = static_cast<int>(rng.next() % n);
          const int b = static_cast<int>(rng.next() % n);
          VertexSet avoid(n);
          avoid.add(a);
          avoid.add(b);
          Assignment asg;
          asg.vertex = {{"s", s}, {"t", t}, {"a", a}, {"b", b}};
          CHECK(lrmso::eval(g, doc, asg) == oracle::conn_path(g, s, t, avoid));
          ++checked;
        }
    }
  }
  CHECK(checked >= 200);
}

TEST_CASE("separation sentence distinguishes colored graphs") {
  // A biclique side has a rank-one cut, so the two color classes separate.
  ColoredGraph k23 = lrmso::gen_biclique(2, 3);
  k23.set_color("A", VertexSet::of(5, {0, 1}));
  k23.set_color("C", VertexSet::of(5, {2, 3, 4}));
  CHECK(both_strategies(k23, kSeparation));

  // On a five-cycle the forced separator {0,1} has cut rank two.
  ColoredGraph c5 = lrmso::gen_cycle(5);
  c5.set_color("A", VertexSet::of(5, {0, 1}));
  c5.set_color("C", VertexSet::of(5, {2, 3, 4}));
  CHECK_FALSE(both_strategies(c5, kSeparation));
  CHECK(both_strategies(c5, separation_at_rank(2)));

  // A single edge cannot be separated at rank zero.
  ColoredGraph k2 = lrmso::gen_path(2);
  k2.set_color("A", VertexSet::of(2, {0}));
  k2.set_color("C", VertexSet::of(2, {1}));
  CHECK_FALSE(both_strategies(k2, separation_at_rank(0)));

  // Without edges every set has rank zero.
  ColoredGraph e4 = lrmso::gen_random(4, 0.0, 1);
  e4.set_color("A", VertexSet::of(4, {0}));
  e4.set_color("C", VertexSet::of(4, {1}));
  CHECK(both_strategies(e4, separation_at_rank(0)));

  // Colors absent from the graph denote empty sets, so both guards are
  // vacuous and the empty witness works at any rank.
  CHECK(both_strategies(lrmso::gen_figure1(), separation_at_rank(0)));
}

TEST_CASE("co-connectivity sentence reads connectivity of the complement") {
  for (int n = 4; n <= 6; ++n) {
    CHECK(both_strategies(lrmso::gen_complement_of_cycle(n), kCoConnectivity));
    CHECK_FALSE(both_strategies(lrmso::gen_complement_of_two_cycles(n, n),
                                kCoConnectivity));
  }
}

TEST_CASE("universal quantifiers are negated existentials") {
  oracle::Mix64 rng{77};
  for (int rep = 0; rep < 10; ++rep) {
    ColoredGraph g = lrmso::gen_random(5, 0.5, rng.next());
    CHECK(eval_text(g, "forall x . (exists y . E(x,y))") ==
          eval_text(g, "~(exists x . ~(exists y . E(x,y)))"));
    CHECK(eval_text(g, "forallSet X : 1 . (exists v . v in X)") ==
          eval_text(g, "~(existsSet X : 1 . ~(exists v . v in X))"));
    CHECK(eval_text(g,
                    "forallSet X : 1 . (forall s . forall t . ((s in X /\\ "
                    "~(t in X)) -> ~E(s,t)))") ==
          eval_text(g,
                    "~(existsSet X : 1 . ~(forall s . forall t . ((s in X /\\ "
                    "~(t in X)) -> ~E(s,t))))"));
  }
}

TEST_CASE("connectivity rewrites preserve meaning") {
  std::vector<std::string> sentences{
      "forall s . forall t . conn(s,t;)",
      "forall s . forall t . forall a . (conn(s,t; a) -> conn(s,t;))",
      "exists s . exists t . exists a . (~s = t /\\ conn(s,t; a))",
      "forall s . forall t . forall a . forall b . (conn(s,t; a,b) -> "
      "conn(s,t; a))",
  };
  std::vector<ColoredGraph> graphs{
      lrmso::gen_path(5), lrmso::gen_cycle(6), lrmso::gen_biclique(2, 2),
      lrmso::gen_complement_of_two_cycles(3, 3)};
  oracle::Mix64 rng{0xabcdef};
  for (int rep = 0; rep < 8; ++rep)
    graphs.push_back(lrmso::gen_random(2 + rep % 5, 0.4, rng.next()));

  for (const auto& text : sentences) {
    auto doc = parse_document(text);
    auto flipped = lrmso::rewrite_conn_to_flipconn(doc);
    auto reached = lrmso::rewrite_flipconn_to_flipreach(flipped);
    CHECK(lrmso::logic::validate(flipped).empty());
    CHECK(lrmso::logic::validate(reached).empty());
    for (const auto& g : graphs) {
      const bool expected = lrmso::eval(g, doc);
      CHECK(lrmso::eval(g, flipped) == expected);
      CHECK(lrmso::eval(g, reached) == expected);
    }
  }
}

TEST_CASE("connectivity rewrites agree pointwise with free variables") {
  auto doc = parse_document("conn(s,t; a)");
  auto flipped = lrmso::rewrite_conn_to_flipconn(doc);
  auto reached = lrmso::rewrite_flipconn_to_flipreach(flipped);
  oracle::Mix64 rng{31337};
  for (int rep = 0; rep < 6; ++rep) {
    ColoredGraph g = lrmso::gen_random(5, 0.45, rng.next());
    for (int s = 0; s < 5; ++s)
      for (int t = 0; t < 5; ++t)
        for (int a = 0; a < 5; ++a) {
          Assignment asg;
          asg.vertex = {{"s", s}, {"t", t}, {"a", a}};
          const bool expected = lrmso::eval(g, doc, asg);
          CHECK(lrmso::eval(g, flipped, asg) == expected);
          CHECK(lrmso::eval(g, reached, asg) == expected);
        }
  }
}

TEST_CASE("flip connectivity atoms are reflexive") {
  const std::string comp_decl =
      "flip Comp k=0 symmetric { (eq=, adj=) ~ (eq=, adj=); }\n";
  // Complement of a complete graph has no edges, yet reachability keeps
  // every vertex connected to itself.
  ColoredGraph k3 = lrmso::gen_biclique(1, 2);
  k3.add_edge(1, 2);  // now a triangle
  CHECK(eval_text(k3, comp_decl + "forall s . flipconn<Comp>(s,s;)"));
  CHECK_FALSE(eval_text(k3, comp_decl + "forall s . forall t . "
                                        "flipconn<Comp>(s,t;)"));
  CHECK(eval_text(k3, comp_decl + "forall s . flipreach<Comp>(s,s;)"));
}

TEST_CASE("flip atom errors surface from evaluation") {
  ColoredGraph g = lrmso::gen_path(3);
  auto code_of = [&](const std::string& text) {
    try {
      eval_text(g, text);
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("evaluation unexpectedly succeeded for: " << text);
    return ErrorCode::MalformedDocument;
  };
  CHECK(code_of("forall s . forall t . flipconn<Nope>(s,t;)") ==
        ErrorCode::UnknownFlipSpec);
  CHECK(code_of("flip F k=1 symmetric { }\nforall s . forall t . "
                "flipconn<F>(s,t;)") == ErrorCode::ArityMismatch);
  CHECK(code_of("flip F k=0 { }\nforall s . forall t . flipconn<F>(s,t;)") ==
        ErrorCode::SymmetryRequired);
  // flipreach accepts asymmetric specs.
  CHECK_NOTHROW(
      eval_text(g, "flip F k=0 { }\nforall s . forall t . flipreach<F>(s,t;)"));
}

TEST_CASE("flipreach follows the flipped digraph exactly") {
  const std::string decl =
      "flip R k=1 { (eq=1, adj=*) ~ (eq=*, adj=1); }\n";
  auto doc = parse_document(decl + "flipreach<R>(s,t; p)");
  const lrmso::FlipSpec spec = doc.specs[0];
  oracle::Mix64 rng{404};
  for (int rep = 0; rep < 8; ++rep) {
    ColoredGraph g = lrmso::gen_random(5, 0.5, rng.next());
    for (int p = 0; p < 5; ++p) {
      lrmso::Digraph h = lrmso::apply_flip(g, spec, {p});
      for (int s = 0; s < 5; ++s) {
        VertexSet reach = h.reachable_from(s);
        for (int t = 0; t < 5; ++t) {
          Assignment asg;
          asg.vertex = {{"s", s}, {"t", t}, {"p", p}};
          CHECK(lrmso::eval(g, doc, asg) == reach.contains(t));
        }
      }
    }
  }
}

TEST_CASE("set strategies agree across a sentence battery") {
  std::vector<std::string> sentences{
      "existsSet X : 1 . ((exists v . v in X) /\\ (exists w . ~(w in X)))",
      "existsSet X : 0 . ((exists v . v in X) /\\ (forall s . forall t . ((s "
      "in X /\\ ~(t in X)) -> ~E(s,t))))",
      "forallSet X : 1 . (existsSet Y : 1 . (forall v . (v in X -> v in Y)))",
      "forallSet X : 0 . ((forall v . v in X) \\/ (exists v . ~(v in X)))",
      "existsSet X : 2 . (forall v . (v in X -> (exists w . (E(v,w) /\\ ~(w "
      "in X)))))",
      separation_at_rank(0),
      separation_at_rank(1),
      separation_at_rank(2),
  };
  std::vector<ColoredGraph> graphs{
      lrmso::gen_path(5),
      lrmso::gen_cycle(6),
      lrmso::gen_biclique(2, 3),
      lrmso::gen_complement_of_cycle(5),
      lrmso::gen_figure1(),
  };
  oracle::Mix64 rng{2024};
  for (int rep = 0; rep < 7; ++rep) {
    ColoredGraph g = lrmso::gen_random(3 + rep % 4, 0.5, rng.next());
    g.set_color("A", oracle::random_set(g.n(), rng));
    g.set_color("C", oracle::random_set(g.n(), rng));
    graphs.push_back(g);
  }
  for (const auto& text : sentences)
    for (const auto& g : graphs) both_strategies(g, text);
}

TEST_CASE("thread count never changes a verdict") {
  std::vector<std::string> sentences{separation_at_rank(1),
                                     "existsSet X : 2 . (forall v . v in X)"};
  oracle::Mix64 rng{99};
  for (const auto& text : sentences)
    for (int rep = 0; rep < 4; ++rep) {
      ColoredGraph g = lrmso::gen_random(5, 0.5, rng.next());
      g.set_color("A", oracle::random_set(5, rng));
      g.set_color("C", oracle::random_set(5, rng));
      auto doc = parse_document(text);
      EvalConfig one;
      one.strategy = LowrankStrategy::Suffix;
      one.threads = 1;
      EvalConfig four = one;
      four.threads = 4;
      CHECK(lrmso::eval(g, doc, {}, one) == lrmso::eval(g, doc, {}, four));
    }
}

TEST_CASE("trace emits one JSON line per quantifier decision") {
  ColoredGraph k23 = lrmso::gen_biclique(2, 3);
  k23.set_color("A", VertexSet::of(5, {0, 1}));
  k23.set_color("C", VertexSet::of(5, {2, 3, 4}));
  std::ostringstream out;
  EvalConfig cfg;
  cfg.trace = true;
  cfg.trace_out = &out;
  CHECK(lrmso::eval(k23, parse_document(kSeparation), {}, cfg));

  std::istringstream lines(out.str());
  std::string line;
  int count = 0;
  bool saw_set_witness = false;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);  // must be valid JSON
    REQUIRE(j.contains("quant"));
    REQUIRE(j.contains("var"));
    REQUIRE(j.contains("result"));
    std::string q = j["quant"];
    CHECK((q == "exists" || q == "forall" || q == "existsSet" ||
           q == "forallSet"));
    if (q == "existsSet") {
      CHECK(j["rank"] == 1);
      if (j["result"] == true && j.contains("witness")) {
        saw_set_witness = true;
        std::vector<int> w = j["witness"];
        VertexSet x(5);
        for (int v : w) x.add(v);
        CHECK(x.contains(0));
        CHECK(x.contains(1));
        CHECK_FALSE(x.contains(2));
      }
    }
    ++count;
  }
  CHECK(count >= 3);  // the set quantifier plus inner vertex sweeps
  CHECK(saw_set_witness);
}

TEST_CASE("evaluation caps turn into typed errors") {
  ColoredGraph c5 = lrmso::gen_cycle(5);
  auto doc = parse_document("existsSet X : 1 . (exists v . v in X)");
  EvalConfig tight;
  tight.strategy = LowrankStrategy::Brute;
  tight.subset_cap = 4;
  try {
    lrmso::eval(c5, doc, {}, tight);
    FAIL("expected the subset cap to fire");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }

  ColoredGraph e3 = lrmso::gen_random(3, 0.0, 7);
  EvalConfig few;
  few.strategy = LowrankStrategy::Suffix;
  few.suffix_cap = 1;
  try {
    lrmso::eval(e3, parse_document("existsSet X : 0 . (forall v . v in X)"),
                {}, few);
    FAIL("expected the suffix cap to fire");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("missing colors read as empty sets") {
  ColoredGraph g = lrmso::gen_cycle(4);
  CHECK_FALSE(eval_text(g, "exists x . Ghost(x)"));
  CHECK(eval_text(g, "forall x . (Ghost(x) -> E(x,x))"));
}

TEST_CASE("inner quantifiers shadow and restore outer bindings") {
  ColoredGraph g(2);
  g.add_edge(0, 1);
  g.set_color("A", VertexSet::of(2, {0}));
  // The inner exists rebinds x; the outer x must come back afterwards.
  CHECK_FALSE(eval_text(g, "forall x . ((exists x . A(x)) -> A(x))"));
  ColoredGraph h(2);
  h.add_edge(0, 1);
  h.set_color("A", VertexSet::of(2, {0, 1}));
  CHECK(eval_text(h, "forall x . ((exists x . A(x)) -> A(x))"));

  // Same for set variables.
  CHECK_FALSE(eval_text(
      g,
      "forallSet X : 1 . ((existsSet X : 1 . (forall v . v in X)) -> (forall "
      "v . v in X))"));
}

TEST_CASE("reachability-suffix duality holds on random instances") {
  oracle::Mix64 rng{0xd1a};
  int checked = 0;
  std::vector<lrmso::FlipSpec> specs;
  specs.push_back(lrmso::compile_conn_to_flipconn(0, "c0"));
  specs.push_back(lrmso::compile_conn_to_flipconn(1, "c1"));
  specs.push_back(lrmso::compile_conn_to_flipconn(2, "c2"));
  specs.push_back(lrmso::logic::parse_flipspecs(
      "flip Comp k=0 symmetric { (eq=, adj=) ~ (eq=, adj=); }")[0]);
  specs.push_back(lrmso::logic::parse_flipspecs(
      "flip R k=1 { (eq=1, adj=*) ~ (eq=*, adj=1); }")[0]);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3 + static_cast<int>(rng.next() % 4);
    ColoredGraph g = lrmso::gen_random(n, 0.5, rng.next());
    for (const auto& spec : specs) {
      std::vector<int> params;
      for (int i = 0; i < spec.k; ++i)
        params.push_back(static_cast<int>(rng.next() % n));
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          CHECK(lrmso::check_freach_suffix_duality(g, spec, params, s, t));
          ++checked;
        }
    }
  }
  CHECK(checked >= 300);
}
