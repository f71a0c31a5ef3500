// End-to-end checks against the installed command-line surface.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "cubemedian/fixtures.hpp"
#include "cubemedian/json_io.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CUBEMEDIAN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), std::move(out)};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/cubemedian_cli_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("fixture --list names every fixture") {
  RunResult r = run_cli("fixture --list");
  CHECK(r.exit_code == 0);
  for (const auto& name : cubemedian::fixture_names())
    CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("fixture paper-example --check reproduces the worked claims") {
  RunResult r = run_cli("fixture paper-example --check");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"min_g_meets_min_h\": false") != std::string::npos);
  CHECK(r.out.find("\"min_g_meets_min_h_squared\": true") != std::string::npos);
  CHECK(r.out.find("\"common_min_power\": 2") != std::string::npos);
  CHECK(r.out.find("\"kind\": \"loxodromic\"") != std::string::npos);
}

TEST_CASE("cubulate turns the one-wall wallspace into a two-vertex path") {
  std::string ws = temp_file("onewall.json",
                             R"({"elements": ["a","b"], "walls": [[["a"],["b"]]]})");
  RunResult r = run_cli("cubulate " + ws);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"o0\"") != std::string::npos);
  CHECK(r.out.find("\"o1\"") != std::string::npos);
  CHECK(r.out.find("\"vertices\": 2") != std::string::npos);
}

TEST_CASE("check-median rejects the six-cycle with a witness, exit 1") {
  std::string doc = cubemedian::graph_doc(cubemedian::build_fixture("six-cycle").graph);
  std::string path = temp_file("sixcycle.json", doc);
  RunResult r = run_cli("check-median " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("witness_triple") != std::string::npos);
}

TEST_CASE("check-median accepts the square, exit 0") {
  std::string path =
      temp_file("square.json", cubemedian::graph_doc(cubemedian::build_fixture("square").graph));
  RunResult r = run_cli("check-median " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"theta_classes\": 2") != std::string::npos);
}

TEST_CASE("invalid documents exit 2") {
  std::string bad = temp_file("bad.json", R"({"elements": ["a","b"],
    "walls": [[["a"],["a","b"]]]})");
  RunResult r = run_cli("validate " + bad);
  CHECK(r.exit_code == 2);

  std::string dup = temp_file("dup.json", R"({"elements": ["a","b","c"],
    "walls": [[["a"],["b","c"]], [["b","c"],["a"]]]})");
  CHECK(run_cli("validate " + dup).exit_code == 2);
}

TEST_CASE("resource caps exit 3") {
  std::string ws = temp_file("star.json", R"({"elements": ["a","b","c"],
    "walls": [[["a"],["b","c"]], [["b"],["a","c"]], [["c"],["a","b"]]]})");
  RunResult r = run_cli("cubulate --max-vertices 2 " + ws);
  CHECK(r.exit_code == 3);
}

TEST_CASE("classify/minset/axis run against document inputs with --window") {
  cubemedian::Fixture f = cubemedian::build_fixture("paper-example");
  std::string complex = temp_file("complex.json",
                                  cubemedian::product_complex_doc(*f.action->complex));
  std::string iso = temp_file("g.json", cubemedian::isometry_doc(f.action->generators[0]));
  std::string h = temp_file("h.json", cubemedian::isometry_doc(f.action->generators[1]));

  RunResult c = run_cli("classify --window 6 " + complex + " " + iso);
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("\"kind\": \"loxodromic\"") != std::string::npos);

  RunResult m = run_cli("minset --window 6 " + complex + " " + iso);
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("\"finite_part_min\"") != std::string::npos);

  RunResult a = run_cli("axis " + complex + " " + iso);
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("\"period\": 1") != std::string::npos);

  RunResult cp = run_cli("common-power " + complex + " " + iso + " " + h);
  CHECK(cp.exit_code == 0);
  CHECK(cp.out.find("\"m\": 2") != std::string::npos);

  RunResult nf = run_cli("common-power --max-m 1 " + complex + " " + iso + " " + h);
  CHECK(nf.exit_code == 1);
  CHECK(nf.out.find("\"found\": false") != std::string::npos);
}

TEST_CASE("subdivide handles graph and product documents") {
  std::string sq =
      temp_file("square2.json", cubemedian::graph_doc(cubemedian::build_fixture("square").graph));
  RunResult r = run_cli("subdivide " + sq);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"vertex_image\"") != std::string::npos);

  cubemedian::Fixture f = cubemedian::build_fixture("paper-example");
  std::string complex = temp_file("complex2.json",
                                  cubemedian::product_complex_doc(*f.action->complex));
  std::string iso = temp_file("g2.json", cubemedian::isometry_doc(f.action->generators[0]));
  RunResult rp = run_cli("subdivide --isometry " + iso + " " + complex);
  CHECK(rp.exit_code == 0);
  CHECK(rp.out.find("\"grid_rank\": 1") != std::string::npos);
  CHECK(rp.out.find("\"trans\": [") != std::string::npos);
}

TEST_CASE("factorize and export-dot") {
  std::string sq =
      temp_file("square3.json", cubemedian::graph_doc(cubemedian::build_fixture("square").graph));
  RunResult f = run_cli("factorize " + sq);
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("\"irreducible\": false") != std::string::npos);

  RunResult d = run_cli("export-dot " + sq);
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("graph mediangraph {") != std::string::npos);
  CHECK(d.out.find("--") != std::string::npos);
}

TEST_CASE("walls reports induced, intrinsic and the agree verdict") {
  // inline graph form
  std::string inline_doc = temp_file("sub_inline.json", R"({
    "graph": {"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]]},
    "members": ["a","b","c"]})");
  RunResult r = run_cli("walls " + inline_doc);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"agree\": true") != std::string::npos);

  // graph referenced as a path relative to the document
  std::string graph_path =
      temp_file("sub_graph.json", cubemedian::graph_doc(cubemedian::build_fixture("square").graph));
  std::string ref_doc = temp_file("sub_ref.json", R"({
    "graph": "cubemedian_cli_sub_graph.json",
    "members": ["00", "11"]})");
  RunResult r2 = run_cli("walls " + ref_doc);
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("\"agree\": true") != std::string::npos);
  // the diagonal pair carries exactly one wall from both constructions
  CHECK(r2.out.find("\"induced\"") != std::string::npos);
}

TEST_CASE("norm-check certifies the translation actions") {
  cubemedian::Fixture f = cubemedian::build_fixture("grid-z2");
  std::string action = temp_file("z2.json", cubemedian::action_doc(*f.action));
  RunResult r = run_cli("norm-check --max-exp 2 " + action);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"all_ok\": true") != std::string::npos);
}

TEST_CASE("norm-check reports the non-free example with exit 1") {
  cubemedian::Fixture f = cubemedian::build_fixture("paper-example");
  std::string action = temp_file("pe.json", cubemedian::action_doc(*f.action));
  RunResult r = run_cli("norm-check " + action);
  CHECK(r.exit_code == 1);
}

TEST_CASE("subcommands are deterministic across runs") {
  cubemedian::Fixture f = cubemedian::build_fixture("paper-example");
  std::string complex = temp_file("det_cx.json",
                                  cubemedian::product_complex_doc(*f.action->complex));
  std::string iso = temp_file("det_g.json", cubemedian::isometry_doc(f.action->generators[0]));
  for (const std::string cmd :
       {std::string("classify "), std::string("minset "), std::string("axis ")}) {
    RunResult a = run_cli(cmd + complex + " " + iso);
    RunResult b = run_cli(cmd + complex + " " + iso);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
  std::string ws = temp_file("det_ws.json", R"({"elements": ["a","b","c"],
    "walls": [[["a"],["b","c"]], [["b"],["a","c"]]]})");
  CHECK(run_cli("cubulate " + ws).out == run_cli("cubulate " + ws).out);
}

TEST_CASE("emitted documents re-parse to equal values") {
  cubemedian::Fixture f = cubemedian::build_fixture("paper-example");
  std::string complex_doc = cubemedian::product_complex_doc(*f.action->complex);
  std::string path = temp_file("roundtrip.json", complex_doc);
  auto pc = cubemedian::parse_product_complex_doc(complex_doc);
  CHECK(cubemedian::product_complex_doc(*pc) == complex_doc);
}
