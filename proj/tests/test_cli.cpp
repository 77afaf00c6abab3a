#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "grpf/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = grpf::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("grpf_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("classify report") {
  const auto r = run({"classify", "--n", "10", "--k", "5", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["command"] == "classify");
  CHECK(j["params"]["n"] == 10);
  CHECK(j["result"]["y1_type"] == "Fano");
  CHECK(j["result"]["dim_y1"] == 11);
  CHECK(j["result"]["y2_type"] == "CalabiYau");
  CHECK_FALSE(j.contains("timing_ms"));
  CHECK(run({"--json", "classify", "--n", "10", "--k", "5"}).out == r.out);
  CHECK(json::parse(run({"classify", "--n", "10", "--k", "5", "--json", "--timing"}).out).contains("timing_ms"));
}

TEST_CASE("reports are byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"windows", "--n", "10", "--k", "5", "--json"},
           {"bwb", "--n", "10", "--s", "-10,-10", "--q", "0,0,0,0,0,0,0,0", "--json"},
           {"hodge", "grass-section", "--n", "7", "--k", "7", "--json"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("parameter errors exit with 2 and name the bound") {
  const auto r = run({"classify", "--n", "3", "--k", "99"});
  CHECK(r.code == 2);
  CHECK(r.err.find("k <= (n choose 2)") != std::string::npos);
  CHECK(run({"classify", "--n", "10"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"classify", "--n", "x", "--k", "1"}).code == 2);
  CHECK(run({"bwb", "--n", "5", "--s", "0,1", "--q", "0,0,0"}).code == 2);
  CHECK(run({"bwb", "--n", "5", "--s", "1,0", "--q", "0,0"}).code == 2);
  CHECK(run({"lemma", "check", "--n", "7"}).code == 2);
  CHECK(run({"collection", "verify", "--n", "10", "--set", "T"}).code == 2);
  CHECK(run({"verify-all", "--profile", "medium"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("hypersurface and Grassmannian sections") {
  const auto h = json::parse(run({"hodge", "hypersurface", "--dim", "4", "--degree", "5", "--json"}).out);
  CHECK(h["result"]["diamond"]["middle_row"] == json::array({1, 101, 101, 1}));
  const auto r = run({"hodge", "hypersurface", "--dim", "4", "--degree", "5"});
  CHECK(r.out.find("1 101 101 1") != std::string::npos);

  const auto g = json::parse(run({"hodge", "grass-section", "--n", "10", "--k", "5", "--json"}).out);
  CHECK(g["result"]["diamond"]["middle_row"] == json::array({0, 0, 0, 0, 1, 101, 101, 1, 0, 0, 0, 0}));
  CHECK(g["result"]["h1_tangent"]["h1"] == 101);
  CHECK(g["result"]["h1_tangent"]["mode"] == "Exact-generic");
}

TEST_CASE("bwb output") {
  const auto j = json::parse(run({"bwb", "--n", "10", "--s", "1,1", "--q", "0,0,0,0,0,0,0,0", "--json"}).out);
  CHECK(j["result"]["outcome"] == "Cohomology");
  CHECK(j["result"]["degree"] == 0);
  CHECK(j["result"]["dimension"] == 45);
  const auto v = json::parse(run({"bwb", "--n", "10", "--s", "0,-1", "--q", "0,0,0,0,0,0,0,0", "--json"}).out);
  CHECK(v["result"]["outcome"] == "Vanishes");
}

TEST_CASE("windows, collections and the all-t check") {
  const auto w = json::parse(run({"windows", "--n", "10", "--k", "5", "--json"}).out);
  CHECK(w["result"]["S"].size() == 45);
  CHECK(w["result"]["T"].size() == 25);
  CHECK(w["result"]["orthogonal_rectangle"].size() == 20);
  CHECK(w["result"]["inclusion"] == true);

  const auto c = run({"collection", "verify", "--n", "7", "--json"});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["result"]["pairs_checked"] == 441);
  CHECK(run({"collection", "verify", "--n", "10", "--set", "T", "--k", "5"}).code == 0);

  const auto l = run({"lemma", "check", "--n", "10", "--json"});
  CHECK(l.code == 0);
  CHECK(json::parse(l.out)["result"]["verdict"] == "Vanishes-for-all-t");
}

TEST_CASE("pfaffian build and sample through files") {
  const auto path = temp_path("amap.json");
  REQUIRE(run({"pfaffian", "random", "--n", "8", "--k", "4", "--seed", "42", "--out", path.string()}).code == 0);
  const auto b = run({"pfaffian", "build", "--in", path.string(), "--json"});
  REQUIRE(b.code == 0);
  CHECK(json::parse(b.out)["result"]["pfaffian"]["degree"] == 4);

  const auto s = run({"pfaffian", "sample", "--in", path.string(), "--prime", "10007", "--points", "30", "--seed", "42",
                      "--json"});
  REQUIRE(s.code == 0);
  const auto j = json::parse(s.out);
  CHECK(j["result"]["found"] == 30);
  for (const auto& pt : j["result"]["points"])
    if (pt["smooth_at"] == true) CHECK(pt["kernel_dim"] == 2);
  CHECK(run({"pfaffian", "sample", "--in", path.string(), "--prime", "10009"}).code == 2);

  const auto report = temp_path("report.json");
  REQUIRE(run({"pfaffian", "sample", "--in", path.string(), "--points", "5", "--out", report.string()}).code == 0);
  std::ifstream in(report);
  CHECK(json::parse(in)["command"] == "pfaffian sample");
  std::filesystem::remove(report);

  std::ofstream(path) << R"({"n": 4, "k": 2, "field": "Q", "matrix": [[1, 0, 0]]})";
  const auto bad = run({"pfaffian", "build", "--in", path.string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("parse") != std::string::npos);
  std::ofstream(path) << "{not json";
  CHECK(run({"pfaffian", "build", "--in", path.string()}).code == 2);
  std::filesystem::remove(path);
  CHECK(run({"pfaffian", "build", "--in", path.string()}).code == 2);
}

TEST_CASE("rational AMap builds symbolically") {
  const auto path = temp_path("q.json");
  std::ofstream(path) << R"({"n": 4, "k": 1, "field": "Q", "matrix": [[1, 0, 0, 0, 0, 1]]})";
  const auto b = run({"pfaffian", "build", "--in", path.string(), "--json"});
  REQUIRE(b.code == 0);
  const auto j = json::parse(b.out);
  CHECK(j["result"]["field"] == "Q");
  CHECK(j["result"]["pfaffian"]["polynomial"] == "u1^2");
  std::filesystem::remove(path);
}

TEST_CASE("the executable reports verification failure with exit code 1") {
  const std::string cli = GRPF_CLI_PATH;
  CHECK(std::system((cli + " verify-all --inject-fault > /dev/null").c_str()) != 0);
  const int status = std::system((cli + " verify-all --inject-fault > /dev/null").c_str());
  CHECK(WEXITSTATUS(status) == 1);
  const int usage = std::system((cli + " classify --n 3 --k 99 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(usage) == 2);
  const int ok = std::system((cli + " classify --n 10 --k 5 > /dev/null").c_str());
  CHECK(WEXITSTATUS(ok) == 0);
}
