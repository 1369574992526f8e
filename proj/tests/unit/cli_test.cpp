#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "mimick/graph_io.hpp"

using namespace mimick;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "mimick");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(MIMICK_TEST_DATA_DIR) + "/" + name; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mimick_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const char* name) const { return (path / name).string(); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void dump(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("sparsify writes graph, mapping and report") {
  TempDir dir;
  auto r = run({"sparsify", "--input", data("star3.json"), "--output", dir.file("h.json"), "--mapping",
                dir.file("map.json"), "--report", dir.file("report.json")});
  REQUIRE(r.code == 0);
  auto report = parse_json(r.out);
  CHECK(report["pass"] == true);
  CHECK(report["quality"] == "1");
  CHECK(parse_json(slurp(dir.file("report.json"))) == report);
  auto h = parse_graph(slurp(dir.file("h.json")));
  CHECK(h.vertex_count() == 3);
  auto map = parse_json(slurp(dir.file("map.json")));
  CHECK(map["clusters"].size() == 3);

  auto v = run({"verify", "--graph", data("star3.json"), "--sparsifier", dir.file("h.json"), "--mapping",
                dir.file("map.json")});
  CHECK(v.code == 0);
  CHECK(parse_json(v.out)["mapping_consistent"] == true);
}

TEST_CASE("verify fails on a tampered sparsifier") {
  TempDir dir;
  REQUIRE(run({"sparsify", "--input", data("star3.json"), "--output", dir.file("h.json")}).code == 0);
  auto h = parse_json(slurp(dir.file("h.json")));
  for (auto& e : h["edges"]) {
    if (e["u"] == "b" || e["v"] == "b") e["cap"] = "1";
  }
  dump(dir.file("bad.json"), h.dump());
  auto v = run({"verify", "--graph", data("star3.json"), "--sparsifier", dir.file("bad.json")});
  CHECK(v.code == 1);
  auto doc = parse_json(v.out);
  CHECK(doc["pass"] == false);
  CHECK(doc["per_index"][1]["g_value"] == "2");
  CHECK(doc["per_index"][1]["h_value"] == "1");
}

TEST_CASE("mtcv prints exact strings") {
  auto r = run({"mtcv", "--input", data("star3.json")});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out) == Json::array({"1", "2", "3"}));
}

TEST_CASE("input errors exit 2 with empty stdout") {
  auto bad = run({"mtcv", "--input", data("bad_negative.json")});
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("negative capacity") != std::string::npos);

  auto missing = run({"mtcv", "--input", data("does_not_exist.json")});
  CHECK(missing.code == 2);
  CHECK(missing.out.empty());

  auto usage = run({"sparsify", "--input", data("star3.json")});
  CHECK(usage.code == 2);
  CHECK(usage.out.empty());

  auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.out.empty());

  auto eps = run({"gadget", "--k", "3", "--subset", "a", "--epsilon", "1/2"});
  CHECK(eps.code == 2);
  CHECK(eps.out.empty());
}

TEST_CASE("tree commands") {
  auto r = run({"tree", "reduce", "--input", data("path4.json")});
  REQUIRE(r.code == 0);
  auto doc = parse_json(r.out);
  CHECK(doc["graph"]["vertices"] == Json::array({"a", "b"}));
  CHECK(doc["graph"]["edges"][0]["cap"] == "1");

  TempDir dir;
  auto c = run({"tree", "cactus", "--input", data("star125.json"), "--output", dir.file("c.json")});
  REQUIRE(c.code == 0);
  auto meta = parse_json(c.out);
  CHECK(meta["clamps"] == 1);
  CHECK(meta["is_cactus"] == true);
  CHECK(meta["size_bound"] == "3");
  auto m = run({"mtcv", "--input", dir.file("c.json")});
  CHECK(parse_json(m.out) == Json::array({"1", "2", "3"}));

  auto raw = run({"tree", "cactus", "--no-clamp", "--input", data("star125.json")});
  CHECK(raw.code == 0);
  auto raw_doc = parse_json(raw.out);
  CHECK(raw_doc["graph"]["allow_negative"] == true);
  CHECK(raw_doc["metadata"]["clamps"] == 0);

  auto cyc = run({"tree", "reduce", "--input", data("triangle.json")});
  CHECK(cyc.code == 2);
  CHECK(cyc.out.empty());
}

TEST_CASE("gadget and combine") {
  TempDir dir;
  auto g = run({"gadget", "--k", "3", "--subset", "a", "--epsilon", "1/4", "--output", dir.file("g.json")});
  REQUIRE(g.code == 0);
  auto doc = parse_json(g.out);
  CHECK(doc["index"] == 1);
  CHECK(doc["mtcv"] == Json::array({"3/4", "1/2", "1/2"}));

  auto c = run({"combine", "--g1", data("star3.json"), "--g2", data("triangle.json"), "--lambda", "1/2", "--output",
                dir.file("c.json")});
  REQUIRE(c.code == 0);
  CHECK(parse_json(c.out)["mtcv"] == Json::array({"3/2", "2", "5/2"}));
}

TEST_CASE("bounds and optimality") {
  auto b = run({"bounds", "--k", "4", "--samples", "5"});
  REQUIRE(b.code == 0);
  auto row = parse_json(b.out);
  CHECK(row["Z"] == 11);
  CHECK(row["M_prime"] == 19);
  CHECK(row["two_power"] == 255);

  auto o = run({"optimality", "--input", data("star3.json")});
  CHECK(o.code == 0);
  auto doc = parse_json(o.out);
  CHECK(doc["unique_cuts"] == false);
  CHECK(doc["min_contraction_clusters"] <= doc["builder_clusters"]);
}
