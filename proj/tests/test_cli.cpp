// End-to-end tests driving the installed binary through a shell. The
// harness finds the executable via the LRMSO_CLI_PATH environment variable
// set by the build.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const std::string& cli_path() {
  static const std::string path = [] {
    const char* p = std::getenv("LRMSO_CLI_PATH");
#ifdef LRMSO_CLI_PATH
    if (p == nullptr) p = LRMSO_CLI_PATH;
#endif
    REQUIRE(p != nullptr);
    return std::string(p);
  }();
  return path;
}

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "lrmso_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// Runs `<cli> <args>` under the shell; stderr is discarded unless the caller
// redirects it inside `args`. An `env` prefix like "LRMSO_CAP=2" is applied
// to the child only.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += "\"" + cli_path() + "\" " + args;
  if (args.find("2>") == std::string::npos) cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string path_of(const std::string& name) {
  return (work_dir() / name).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kCoConnectivity =
    "flip Comp k=0 symmetric { (eq=, adj=) ~ (eq=, adj=); }\n"
    "forall s . forall t . flipconn<Comp>(s,t;)\n";

}  // namespace

TEST_CASE("gen writes graphs that rank reads back") {
  const std::string p4 = path_of("p4.json");
  CHECK(run_cli("gen path 4 -o " + p4).exit_code == 0);
  auto g = json::parse(read_file(p4));
  CHECK(g["n"] == 4);
  CHECK(g["edges"].size() == 3);

  auto r = run_cli("rank " + p4 + " --set 0,1");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["rk_f2"] == 1);
  CHECK(j["rk_q"] == 1);
  CHECK(j["dv"] == 4);

  // No --set means the empty cut.
  auto r0 = run_cli("rank " + p4);
  CHECK(r0.exit_code == 0);
  CHECK(json::parse(r0.out)["rk_f2"] == 0);
}

TEST_CASE("gen accepts stdin-style output and rank reads from stdin") {
  auto piped = run_cli("gen cycle 5 | \"" + cli_path() + "\" rank - --set 0,1");
  CHECK(piped.exit_code == 0);
  CHECK(json::parse(piped.out)["rk_f2"] == 2);
}

TEST_CASE("check evaluates the co-connectivity sentence end to end") {
  const std::string cc6 = path_of("cc6.json");
  const std::string cc44 = path_of("cc44.json");
  const std::string formula = path_of("coconn.lrm");
  REQUIRE(run_cli("gen complement_of_cycle 6 -o " + cc6).exit_code == 0);
  REQUIRE(run_cli("gen complement_of_two_cycles 4 4 -o " + cc44).exit_code ==
          0);
  write_file(formula, kCoConnectivity);

  for (const std::string strat : {"brute", "suffix"}) {
    auto yes = run_cli("check " + cc6 + " " + formula + " --strategy " + strat);
    CHECK(yes.exit_code == 0);
    CHECK(json::parse(yes.out)["result"] == true);

    auto no = run_cli("check " + cc44 + " " + formula + " --strategy " + strat);
    CHECK(no.exit_code == 1);
    CHECK(json::parse(no.out)["result"] == false);
  }
}

TEST_CASE("check rejects open formulas and bad syntax as input errors") {
  const std::string p4 = path_of("p4b.json");
  REQUIRE(run_cli("gen path 4 -o " + p4).exit_code == 0);
  const std::string open_formula = path_of("open.lrm");
  write_file(open_formula, "conn(s,t;)\n");
  CHECK(run_cli("check " + p4 + " " + open_formula).exit_code == 3);

  const std::string broken = path_of("broken.lrm");
  write_file(broken, "forall x . E(x x)\n");
  CHECK(run_cli("check " + p4 + " " + broken).exit_code == 3);
}

TEST_CASE("check trace goes to stderr as JSON lines") {
  const std::string cc5 = path_of("cc5.json");
  const std::string formula = path_of("coconn2.lrm");
  const std::string trace = path_of("trace.jsonl");
  REQUIRE(run_cli("gen complement_of_cycle 5 -o " + cc5).exit_code == 0);
  write_file(formula, kCoConnectivity);
  auto r = run_cli("check " + cc5 + " " + formula + " --trace 2>" + trace);
  CHECK(r.exit_code == 0);
  std::istringstream lines(read_file(trace));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = json::parse(line);
    CHECK(j.contains("quant"));
    CHECK(j.contains("result"));
    ++count;
  }
  CHECK(count >= 2);
}

TEST_CASE("enum-lowrank methods agree and honor thread counts") {
  const std::string c6 = path_of("c6.json");
  REQUIRE(run_cli("gen cycle 6 -o " + c6).exit_code == 0);
  auto brute = run_cli("enum-lowrank " + c6 + " -r 1 --method brute");
  auto suffix = run_cli("enum-lowrank " + c6 + " -r 1 --method suffix");
  auto threaded =
      run_cli("enum-lowrank " + c6 + " -r 1 --method suffix --threads 4");
  REQUIRE(brute.exit_code == 0);
  REQUIRE(suffix.exit_code == 0);
  REQUIRE(threaded.exit_code == 0);

  auto sets_of = [](const std::string& text) {
    std::vector<std::vector<int>> sets;
    for (const auto& row : json::parse(text)) {
      sets.push_back(row["set"].get<std::vector<int>>());
      REQUIRE(row.contains("source"));
    }
    return sets;
  };
  CHECK(sets_of(brute.out) == sets_of(suffix.out));
  // Thread count must not change a single output byte.
  CHECK(suffix.out == threaded.out);
}

TEST_CASE("flip emits the flipped digraph as an arc list") {
  const std::string p4 = path_of("p4c.json");
  const std::string spec = path_of("del.flip");
  REQUIRE(run_cli("gen path 4 -o " + p4).exit_code == 0);
  write_file(spec,
             "flip Del k=1 symmetric { (eq=1, adj=*) ~ (eq=*, adj=*); "
             "(eq=*, adj=*) ~ (eq=1, adj=*); }\n");
  auto r = run_cli("flip " + p4 + " --spec " + spec + " --name Del --params 1");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["n"] == 4);
  // Deleting every pair at vertex 1 kills edges 0-1 and 1-2 and toggles the
  // non-edge 1-3 on.
  std::vector<std::vector<int>> want{{1, 3}, {2, 3}, {3, 1}, {3, 2}};
  CHECK(j["arcs"].get<std::vector<std::vector<int>>>() == want);

  CHECK(run_cli("flip " + p4 + " --spec " + spec + " --name Nope --params 1")
            .exit_code == 3);
}

TEST_CASE("suffixes reproduces the worked-example family") {
  const std::string fig = path_of("fig.json");
  REQUIRE(run_cli("gen figure1 -o " + fig).exit_code == 0);
  auto r = run_cli("suffixes " + fig + " --a-plus 2,3 --a-minus 0,1 -r 2");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["admissible"] == true);
  std::vector<std::vector<int>> want{
      {}, {0, 1, 2, 3, 4, 5, 6, 7}, {2, 3, 5, 6, 7}, {2, 3, 6, 7}, {2, 3, 7}};
  CHECK(j["suffixes"].get<std::vector<std::vector<int>>>() == want);

  // At rank 1 the pair is inadmissible.
  auto r1 = run_cli("suffixes " + fig + " --a-plus 2,3 --a-minus 0,1 -r 1");
  REQUIRE(r1.exit_code == 0);
  CHECK(json::parse(r1.out)["admissible"] == false);
}

TEST_CASE("seed works through both the digraph and the flip route") {
  const std::string fig = path_of("fig2.json");
  REQUIRE(run_cli("gen figure1 -o " + fig).exit_code == 0);
  auto r =
      run_cli("seed " + fig + " --a-plus 2,3 --a-minus 0,1 -r 2 --b 6");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["x_plus"].get<std::vector<int>>() == std::vector<int>{2, 3, 7});
  CHECK(j["x_minus"].get<std::vector<int>>() == std::vector<int>{0, 1, 4, 5});
  CHECK(j["parts"].get<std::vector<std::vector<int>>>() ==
        std::vector<std::vector<int>>{{6}});

  const std::string p4 = path_of("p4d.json");
  const std::string spec = path_of("del2.flip");
  REQUIRE(run_cli("gen path 4 -o " + p4).exit_code == 0);
  write_file(spec,
             "flip Del k=1 symmetric { (eq=1, adj=*) ~ (eq=*, adj=*); "
             "(eq=*, adj=*) ~ (eq=1, adj=*); }\n");
  auto f = run_cli("seed " + p4 + " --spec " + spec +
                   " --name Del --params 1 --b 0");
  REQUIRE(f.exit_code == 0);
  auto fj = json::parse(f.out);
  CHECK(fj["parts"].get<std::vector<std::vector<int>>>() ==
        std::vector<std::vector<int>>{{0}, {1, 2, 3}});

  // Asking for both routes at once is a usage error.
  CHECK(run_cli("seed " + fig + " --a-plus 2,3 --a-minus 0,1 -r 2 --spec " +
                spec + " --name Del")
            .exit_code == 2);
}

TEST_CASE("capture and vc emit their JSON shapes") {
  const std::string p6 = path_of("p6.json");
  REQUIRE(run_cli("gen path 6 -o " + p6).exit_code == 0);
  auto c = run_cli("capture " + p6 + " --set 0,1,2 -t 2");
  REQUIRE(c.exit_code == 0);
  auto cj = json::parse(c.out);
  REQUIRE(cj.contains("left"));
  REQUIRE(cj.contains("right"));
  CHECK(cj["order"].get<int>() <= 4);

  // {1,3} is shattered by the neighborhoods of 0, 2, 4 and 5, and no
  // three vertices can be shattered on a path.
  auto v = run_cli("vc " + p6);
  REQUIRE(v.exit_code == 0);
  CHECK(json::parse(v.out)["vc"] == 2);
}

TEST_CASE("selftest recomputes its goldens") {
  auto r = run_cli("selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ok: suffix family is the golden five-set family") !=
        std::string::npos);
  CHECK(r.out.find("mismatch") == std::string::npos);
}

TEST_CASE("usage, input, and cap errors map to distinct exit codes") {
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("rank").exit_code == 2);  // missing required positional
  CHECK(run_cli("--help").exit_code == 0);

  const std::string p4 = path_of("p4e.json");
  REQUIRE(run_cli("gen path 4 -o " + p4).exit_code == 0);
  CHECK(run_cli("rank " + path_of("missing.json")).exit_code == 3);
  CHECK(run_cli("rank " + p4 + " --set 9").exit_code == 3);
  CHECK(run_cli("gen random 5 0.5").exit_code == 3);  // seed required
  CHECK(run_cli("gen nosuchfamily 3").exit_code == 3);

  const std::string bad = path_of("bad.json");
  write_file(bad, "{\"n\": 2, \"edges\": [[0,0]]}");
  CHECK(run_cli("rank " + bad).exit_code == 3);
}

TEST_CASE("caps flow from flag and environment with flag precedence") {
  const std::string fig = path_of("fig3.json");
  REQUIRE(run_cli("gen figure1 -o " + fig).exit_code == 0);
  const std::string query = "suffixes " + fig + " --a-plus 2,3 --a-minus 0,1 -r 2";
  CHECK(run_cli(query + " --cap 2").exit_code == 4);
  CHECK(run_cli(query, "LRMSO_CAP=2").exit_code == 4);
  CHECK(run_cli(query + " --cap 100", "LRMSO_CAP=2").exit_code == 0);
  CHECK(run_cli(query, "LRMSO_CAP=bogus").exit_code == 2);

  // The evaluator's enumeration guard shares the same plumbing.
  const std::string formula = path_of("exists.lrm");
  write_file(formula, "existsSet X : 0 . (forall v . v in X)\n");
  const std::string e3 = path_of("e3.json");
  write_file(e3, "{\"n\": 3, \"edges\": []}");
  CHECK(run_cli("check " + e3 + " " + formula + " --strategy suffix",
                "LRMSO_CAP=1")
            .exit_code == 4);
}

TEST_CASE("gen validates family arguments") {
  CHECK(run_cli("gen path").exit_code == 3);       // missing argument
  CHECK(run_cli("gen path 4 9").exit_code == 3);   // extra argument
  CHECK(run_cli("gen random 5 1.5 --seed 1").exit_code == 3);
  // Reproducibility: the same seed yields byte-identical graphs.
  auto a = run_cli("gen random 6 0.5 --seed 42");
  auto b = run_cli("gen random 6 0.5 --seed 42");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto c = run_cli("gen random 6 0.5 --seed 43");
  CHECK(a.out != c.out);
}
