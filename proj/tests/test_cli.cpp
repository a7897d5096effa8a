#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "fixtures.hpp"

using namespace chordrig;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "chordrig");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(CHORDRIG_DATA_DIR) + "/" + name; }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "chordrig_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  io::write_text_file(p.string(), text);
  return p.string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("analyze reports verdicts", "[cli]") {
  const Run ex = run({"analyze", data("worked.json")});
  CHECK(ex.code == 0);
  CHECK(contains(ex.out, "verdict: UniversallyRigid"));
  CHECK(contains(ex.out, "connectivity: 3"));
  CHECK(contains(ex.out, "psd stress rank: 3"));

  const Run a = run({"analyze", data("collinear5.json")});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "verdict: Inconclusive (NotGeneralPosition)"));
  CHECK(contains(a.out, "general position: no (points 1 2 3"));

  const Run b = run({"analyze", data("square6.json")});
  CHECK(contains(b.out, "chordal: no (chordless cycle"));
  CHECK(contains(b.out, "verdict: Inconclusive (NotChordal)"));

  const std::string ce = (scratch() / "path3_q.json").string();
  const Run p = run({"analyze", data("path3.json"), "--counterexample", ce});
  CHECK(p.code == 0);
  CHECK(contains(p.out, "verdict: NotGloballyRigid"));
  CHECK(contains(p.out, "cut: 2"));
  const Framework q = io::framework_from_json(io::read_json_file(ce));
  CHECK(q.points() == std::vector<Vector>{{2}, {1}, {2}});

  const Run js = run({"analyze", data("worked.json"), "--format", "json"});
  const auto j = io::json::parse(js.out);
  CHECK(j["certificate"]["verdict"] == "UniversallyRigid");
  CHECK(j["chordal"] == true);
}

TEST_CASE("certify writes the certificate", "[cli]") {
  const std::string out = (scratch() / "cert.json").string();
  CHECK(run({"certify", data("worked.json"), "-o", out}).code == 0);
  const auto j = io::read_json_file(out);
  CHECK(io::matrix_from_json(j["stress"], "$") == fx::worked_ZZt());
}

TEST_CASE("psdize from the command line", "[cli]") {
  const Run r = run({"psdize", data("worked.json"), data("worked_stress.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rank: 3"));
  CHECK(contains(r.out, "leading minors checked: 3 (10, -20, -10)"));
  CHECK(contains(r.out, "result: PSD, rank 3"));

  const std::string out = (scratch() / "psd.json").string();
  CHECK(run({"psdize", data("worked.json"), "--stress", data("worked_stress.json"), "-o", out}).code == 0);
  CHECK(io::stress_from_json(io::read_json_file(out)) == fx::worked_ZZt());

  const std::string zero = write("zero.json", io::stress_to_json(Matrix(6, 6)).dump());
  const Run z = run({"psdize", data("worked.json"), zero});
  CHECK(z.code == 1);
  CHECK(contains(z.err, "PreconditionViolated"));

  // K4 on a line with s11 = 0 but rank 2
  const Framework k4(fx::k(4), 1, {{0}, {1}, {2}, {3}});
  const Matrix g = gale_matrix(k4).matrix();
  const Matrix s = g * Matrix{{4, -1}, {-1, 0}} * g.transpose();
  const std::string fw = write("k4.json", io::to_json(k4).dump());
  const std::string st = write("k4_stress.json", io::stress_to_json(s).dump());
  const Run d = run({"psdize", fw, st});
  CHECK(d.code == 1);
  CHECK(contains(d.err, "NotGenericRankProfile"));
  CHECK(contains(d.err, "failing minor: 1"));

  CHECK(run({"psdize", data("worked.json")}).code == 2);
  CHECK(run({"psdize", data("worked.json"), data("worked_stress.json"), "--stress", data("worked_stress.json")}).code ==
        2);
}

TEST_CASE("stress-check reports", "[cli]") {
  const Run r = run({"stress-check", data("worked.json"), data("worked_stress.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "generic rank profile: yes"));
  CHECK(contains(r.out, "psd: no"));
  CHECK(contains(r.out, "stress matrix: yes"));
}

TEST_CASE("gen output feeds analyze", "[cli]") {
  const Run g = run({"gen", "--n", "6", "--r", "2", "--seed", "1"});
  CHECK(g.code == 0);
  CHECK(run({"gen", "--n", "6", "--r", "2", "--seed", "1"}).out == g.out);
  const std::string path = write("gen.json", g.out);
  const Run a = run({"analyze", path});
  CHECK(contains(a.out, "verdict: UniversallyRigid"));
  CHECK(contains(a.out, "connectivity: 3"));

  const Framework simplex = io::framework_from_json(io::json::parse(run({"gen", "--n", "3", "--r", "2"}).out));
  CHECK(simplex.graph().is_complete());

  const Framework small = io::framework_from_json(io::json::parse(run({"gen", "--n", "5", "--r", "1", "--seed", "2"}).out));
  const auto c = is_chordal(small.graph());
  CHECK(c.chordal);
  CHECK(chordal_connectivity(small.graph(), c.order) >= 2);
}

TEST_CASE("gale, reflect and chordal subcommands", "[cli]") {
  const Run g = run({"gale", data("worked.json"), "--property-a"});
  CHECK(g.code == 0);
  CHECK(io::matrix_from_json(io::json::parse(g.out)["matrix"], "$") == fx::worked_Z());

  const Run r = run({"reflect", data("path3.json")});
  CHECK(r.code == 0);
  CHECK(contains(r.err, "cut: 2"));
  const Run k = run({"reflect", data("worked.json")});
  CHECK(k.code == 1);

  const Run c = run({"chordal", data("square6.json"), "--format", "json"});
  const auto j = io::json::parse(c.out);
  CHECK(j["chordal"] == false);
  CHECK(j["chordless_cycle"].size() == 4);
  CHECK(contains(run({"chordal", data("worked.json")}).out, "connectivity: 3"));
}

TEST_CASE("plot writes svg", "[cli]") {
  const Run p = run({"plot", data("collinear5.json")});
  CHECK(p.code == 0);
  CHECK(p.out.starts_with("<svg"));
  CHECK(run({"plot", data("worked.json"), "--stress", data("worked_stress.json")}).code == 0);
  CHECK(run({"plot", data("path3.json")}).code == 1);
}

TEST_CASE("exit codes for bad invocations", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", data("worked.json"), "--format", "yaml"}).code == 2);
  CHECK(run({"gen", "--n", "6"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const Run bad = run({"analyze", write("broken.json", "{\"dim\": 2, \"points\": [")});
  CHECK(bad.code == 3);
  CHECK(contains(bad.err, "ParseError"));
  const Run loop = run({"analyze", write("loop.json", R"({"dim":1,"points":[[0],[1]],"edges":[[1,1]]})")});
  CHECK(loop.code == 3);
  CHECK(contains(loop.err, "$.edges[0]"));
  CHECK(run({"gen", "--n", "2", "--r", "3"}).code != 0);
}
