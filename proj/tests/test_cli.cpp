#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cubefold/cli.hpp"
#include "support.hpp"

using namespace cubefold;
using support::fixture;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// The graph block that starts a command's output.
Graph leading_graph(const std::string& out) {
  std::istringstream in(out.substr(0, out.find("\nmap ") + 1));
  return parse_graph(in);
}

}  // namespace

TEST_CASE("check") {
  auto p4 = run({"check", fixture("p4.g")});
  CHECK(p4.code == 0);
  CHECK(p4.out == "median: true\n");

  auto k = run({"check", fixture("k23.g")});
  CHECK(k.code == 0);
  CHECK(k.out == "median: false (K_{2,3} witness a b | x y z)\n");

  auto bad = run({"check", "--submedian", fixture("bad.g")});
  CHECK(bad.out.find("parity-injective: false\n") != std::string::npos);
  CHECK(bad.out.find("squares-span-cycles: true") != std::string::npos);
}

TEST_CASE("domain errors exit 1 with the error name") {
  auto r = run({"fold", "--pairs", "A:D", fixture("p4.g")});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err == "NotInContact: separation distance 2\n");

  auto missing = run({"check", "/nonexistent.g"});
  CHECK(missing.code == 1);
  CHECK(missing.err.rfind("ParseError: ", 0) == 0);

  auto tangent = run({"swell", "--pairs", "A:C", fixture("p4.g")});
  CHECK(tangent.code == 1);
  CHECK(tangent.err.rfind("NotTangent: ", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"fold", fixture("p4.g")}).code == 2);
  CHECK(run({"hull", fixture("q3.g"), "000"}).code == 2);
  CHECK(run({"factorize", "--group", fixture("p4_flip.grp"), fixture("p4.g"), fixture("p2.g"),
             fixture("p4_to_p2_flip.map")})
            .code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("graph commands") {
  auto h = run({"hyperplanes", fixture("p2.g")});
  CHECK(h.out == format_hyperplanes(fixtures::path(2)));

  CHECK(run({"median", fixture("q3.g"), "000", "011", "110"}).out == "010\n");
  CHECK(run({"hull", "--median", fixture("q3.g"), "000", "111"}).out == "{000,111}\n");
  CHECK(run({"hull", "--convex", fixture("c4.g"), "c0", "c2"}).out == "{c0,c1,c2,c3}\n");

  auto fold = run({"fold", "--pairs", "B:C", fixture("p4.g")});
  CHECK(fold.code == 0);
  CHECK(is_isomorphic(leading_graph(fold.out), fixtures::tripod()));
  CHECK(fold.out.find("merged {B,C}") != std::string::npos);

  auto swell = run({"swell", "--pairs", "A:B", fixture("p2.g")});
  CHECK(swell.out.find("transverse A:B\n") != std::string::npos);
  CHECK(is_isomorphic(leading_graph(swell.out), fixtures::cycle(4)));

  auto cub = run({"cubulate", fixture("c4.g")});
  CHECK(cub.out.find("map eta\n") != std::string::npos);

  auto orbit = run({"orbit", "--group", fixture("p4_flip.grp"), "--pairs", "A:B", fixture("p4.g")});
  CHECK(orbit.out == "order: 2\norbit: {A:B,C:D}\n");
}

TEST_CASE("map commands") {
  auto c = run({"classify", fixture("p4.g"), fixture("p2.g"), fixture("p4_to_p2_fold.map")});
  CHECK(c.out.rfind("class: parallel-preserving\n", 0) == 0);

  auto f = run({"factorize", fixture("p4.g"), fixture("p2.g"), fixture("p4_to_p2_fold.map")});
  CHECK(f.code == 0);
  CHECK(f.out == "move 1 fold {B:C}\nmove 2 fold {A:C}\nterminal: 3 vertices, 2 edges\niota: isometry\n");

  auto eq = run({"factorize", "--group", fixture("p4_flip.grp"), "--cogroup", fixture("p2_flip.grp"),
                 fixture("p4.g"), fixture("p2.g"), fixture("p4_to_p2_flip.map")});
  CHECK(eq.code == 0);
  CHECK(eq.out.find("terminal: ") != std::string::npos);

  auto ne = run({"factorize", "--group", fixture("p4_flip.grp"), "--cogroup", fixture("p2_flip.grp"),
                 fixture("p4.g"), fixture("p2.g"), fixture("p4_to_p2_fold.map")});
  CHECK(ne.code == 1);
  CHECK(ne.err.rfind("NotEquivariant: ", 0) == 0);
}

TEST_CASE("emit-dot writes one file per move and the terminal graph") {
  auto dir = std::filesystem::temp_directory_path() / "cubefold_cli_dot";
  std::filesystem::remove_all(dir);
  auto r = run({"factorize", "--emit-dot", dir.string(), fixture("p4.g"), fixture("p2.g"),
                fixture("p4_to_p2_fold.map")});
  CHECK(r.code == 0);
  std::set<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files.insert(e.path().filename().string());
  CHECK(files == std::set<std::string>{"step1.dot", "step2.dot", "terminal.dot"});
  std::filesystem::remove_all(dir);

  auto dot = run({"export-dot", "--highlight", "A", fixture("c4.g")});
  CHECK(dot.out == export_dot(fixtures::cycle(4), HyperplaneId{0}));
}

TEST_CASE("output is deterministic") {
  auto trace = (std::filesystem::temp_directory_path() / "cubefold_cli_trace.txt").string();
  std::vector<std::string> args{"factorize", "--trace", trace, fixture("p4.g"), fixture("p2.g"),
                                fixture("p4_to_p2_fold.map")};
  auto a = run(args);
  auto first = slurp(trace);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(first == slurp(trace));
  CHECK(first.find("graph step1") != std::string::npos);
  std::filesystem::remove(trace);
}
