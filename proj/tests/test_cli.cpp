#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lpa/cli.hpp"
#include "lpa/json_io.hpp"

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / "lpakit_cli_test";
    fs::create_directories(path);
  }
  std::string write(const std::string& name, const std::string& text) {
    fs::path p = path / name;
    std::ofstream f(p);
    f << text;
    return p.string();
  }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = lpa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kRose2 = "vertex v\nedge e1 v v\nedge e2 v v\n";

}  // namespace

TEST_CASE("bf-twisted reports the invariant factors") {
  TempDir dir;
  std::string r2 = dir.write("r2.graph", kRose2);
  RunResult r = run({"bf-twisted", r2, "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["group"]["factors"] == nlohmann::json::array({"3"}));
  CHECK(j["det_sigma"]["repr"] == "1-2*s");
}

TEST_CASE("obstruct between the rose and its splice") {
  TempDir dir;
  std::string r2 = dir.write("r2.graph", kRose2);
  RunResult mv = run({"moves", "--op", "splice", "--vertex", "v", r2, "-o",
                      (dir.path / "r2m.graph").string()});
  REQUIRE(mv.code == 0);
  RunResult r = run({"obstruct", r2, (dir.path / "r2m.graph").string(),
                     "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["possible"] == false);

  RunResult self = run({"obstruct", r2, r2, "--json"});
  CHECK(nlohmann::json::parse(self.out)["possible"] == true);
}

TEST_CASE("moves output re-parses identically") {
  TempDir dir;
  std::string r2 = dir.write("r2.graph", kRose2);
  RunResult dual = run({"moves", "--op", "dual", r2});
  CHECK(dual.code == 0);
  CHECK(dual.out == kRose2);

  for (std::string op : {"splice", "outsplit", "cover", "square"}) {
    std::vector<std::string> args{"moves", "--op", op, r2};
    if (op == "splice") {
      args.push_back("--vertex");
      args.push_back("v");
    }
    RunResult r = run(args);
    REQUIRE(r.code == 0);
    lpa::Graph g = lpa::parse_graph_text(r.out);
    CHECK(lpa::print_graph_text(g) == r.out);
  }
}

TEST_CASE("json output is stable across runs") {
  TempDir dir;
  std::string r2 = dir.write("r2.graph", kRose2);
  RunResult a = run({"info", r2, "--json"});
  RunResult b = run({"info", r2, "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
  TempDir dir;
  std::string bad = dir.write("bad.graph", "vertex v\nwhat is this\n");
  CHECK(run({"bf", bad}).code == 1);

  std::string missing = (dir.path / "missing.graph").string();
  CHECK(run({"bf", missing}).code == 1);

  std::string sink = dir.write("sink.graph", "vertex w\n");
  RunResult elim = run({"moves", "--op", "elim", "--vertex", "w", sink});
  CHECK(elim.code == 2);

  std::string r2 = dir.write("r2.graph", kRose2);
  CHECK(run({"term", r2, "e1 +"}).code == 1);
  CHECK(run({"term", r2, "eX"}).code == 2);
  CHECK(run({"nonsense"}).code == 1);
}

TEST_CASE("term subcommand") {
  TempDir dir;
  std::string r2 = dir.write("r2.graph", kRose2);
  RunResult r = run({"term", r2, "e1 e1* + e2 e2*"});
  CHECK(r.code == 0);
  CHECK(r.out == "v\n");
  RunResult c = run({"term", r2, "--ambient", "cohn", "e2 e2*", "--json"});
  CHECK(c.code == 0);
  auto j = nlohmann::json::parse(c.out);
  CHECK(j["normal_form"] == "e2 e2*");
  CHECK(j["degree"] == 0);
}

TEST_CASE("kh and uct subcommands") {
  TempDir dir;
  std::string r4 = dir.write("r4.graph",
                             "vertex v\nedge e1 v v\nedge e2 v v\nedge e3 v "
                             "v\nedge e4 v v\n");
  RunResult r = run({"kh", r4, "--preset", "field", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["middle"]["factors"] == nlohmann::json::array({"3", "3"}));

  std::string coeff = dir.write("coeff.json", R"({"degrees": {
      "0": {"rank": 1, "factors": []},
      "1": {"rank": 1, "factors": []},
      "-1": {"rank": 0, "factors": []}}})");
  RunResult u = run({"uct", r4, "--coeff", coeff, "--json"});
  CHECK(u.code == 0);
  auto ju = nlohmann::json::parse(u.out);
  CHECK(ju["left"]["factors"] == nlohmann::json::array({"3"}));
  CHECK(ju["right"]["description"] == "0");
}

TEST_CASE("lift subcommand emits a verified certificate") {
  TempDir dir;
  std::string r4 = dir.write("r4.graph",
                             "vertex v\nedge e1 v v\nedge e2 v v\nedge e3 v "
                             "v\nedge e4 v v\n");
  std::string r92 = dir.write("r92.graph",
                              "vertex u\nvertex w\n"
                              "edge a u u\nedge b u w\nedge c u w\nedge d u "
                              "w\nedge e w u\nedge f w w\n");
  RunResult r = run({"lift", r4, r92, "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["certificate"]["verified"] == true);
  // labels ride along on the presentations
  CHECK(j["certificate"]["mat_a"]["row_labels"] ==
        nlohmann::json::array({"v"}));
}

TEST_CASE("twisted lift subcommand") {
  TempDir dir;
  std::string r2 = dir.write("r2.graph", kRose2);
  RunResult self = run({"lift", r2, r2, "--twisted", "--json"});
  CHECK(self.code == 0);
  auto j = nlohmann::json::parse(self.out);
  CHECK(j["certificate"]["verified"] == true);

  // a single loop has 1 - s on the diagonal: the doubled presentation is
  // not injective, so twisted lifting is unsupported there
  std::string r1 = dir.write("r1.graph", "vertex v\nedge e v v\n");
  RunResult r = run({"lift", r1, r1, "--twisted"});
  CHECK(r.code == 2);
  CHECK(r.err.find("kernel") != std::string::npos);

  // untwisted lifting between the free groups works fine
  RunResult plain = run({"lift", r1, r1, "--json"});
  CHECK(plain.code == 0);
  CHECK(nlohmann::json::parse(plain.out)["certificate"]["verified"] == true);
}

TEST_CASE("classify subcommand") {
  TempDir dir;
  std::string r2 = dir.write("r2.graph", kRose2);
  RunResult r = run({"classify", r2, r2, "--json",
                     "--assume-regular-supercoherent", "--assume-2-invertible"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["bf_iso"].is_object());
  bool found = false;
  for (const auto& t : j["theorems"])
    if (t["name"] == "involutive_stable") {
      CHECK(t["applicable"] == true);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("graph json io") {
  TempDir dir;
  std::string path = dir.write("g.json", R"({"vertices": ["v", "w"],
    "edges": [{"id": "e", "src": "v", "dst": "w"}]})");
  RunResult r = run({"bf", path, "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 1);

  // moves --json round-trips through the json format
  RunResult mv = run({"moves", "--op", "dual", path, "--json"});
  CHECK(mv.code == 0);
  lpa::Graph g = lpa::graph_from_json(nlohmann::json::parse(mv.out));
  CHECK(g.edges()[0].src == "w");
}

TEST_CASE("selftest runs with a fixed seed") {
  RunResult r = run({"selftest", "--seed", "123"});
  CHECK(r.code == 0);
  CHECK(r.out.find("seed 123") != std::string::npos);
}
