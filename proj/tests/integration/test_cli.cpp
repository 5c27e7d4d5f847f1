#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "coxflip_app/cli.hpp"
#include "coxflip_app/json_io.hpp"

using coxflip::app::cli_main;
using coxflip::app::json;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "coxflip");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}
} // namespace

TEST_CASE("group-order") {
  auto r = run({"group-order", "--family", "E", "--n", "7", "--method", "chain"});
  CHECK(r.code == 0);
  CHECK(r.out == "1451520\n");
  auto e = run({"group-order", "--family", "D", "--n", "5", "--method", "enumerate"});
  CHECK(e.out == "1920\n");
  auto def = run({"group-order", "--family", "E", "--n", "8"});
  CHECK(def.out == "348364800\n");
}

TEST_CASE("orbits") {
  auto r = run({"orbits", "--family", "A", "--n", "1"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["classes"].size() == 2);
  CHECK(j["classes"][0]["label"] == "O0");
  CHECK(j["classes"][1]["label"] == "O1");
  auto bfs = run({"orbits", "--family", "E", "--n", "7", "--method", "bfs"});
  auto cf = run({"orbits", "--family", "E", "--n", "7", "--method", "closed-form"});
  CHECK(bfs.code == 0);
  CHECK(json::parse(bfs.out)["classes"] == json::parse(cf.out)["classes"]);
}

TEST_CASE("graph") {
  auto r = run({"graph", "--family", "D", "--n", "4"});
  CHECK(json::parse(r.out)["edges"] == json::parse("[[1,2],[2,3],[2,4]]"));
  const std::string path = "coxflip_test_custom_graph.json";
  {
    std::ofstream f(path);
    f << R"({"n":3,"edges":[[1,2],[2,3],[1,3]]})";
  }
  auto c = run({"graph", "--custom", path});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["edges"].size() == 3);
  {
    std::ofstream f(path);
    f << R"({"n":2,"edges":[[1,1]]})";
  }
  CHECK(run({"graph", "--custom", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("solve") {
  auto r = run({"solve", "--family", "A", "--n", "2", "--from", "10", "--to", "01"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["moves"] == json::parse("[1,2]"));
  auto bad = run({"solve", "--family", "A", "--n", "2", "--from", "1x", "--to", "01"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "e8-w0"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["suite"] == "e8-w0");
  auto k = run({"verify", "--suite", "kernel", "--family", "D", "--n", "6"});
  CHECK(k.code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"graph", "--family", "E", "--n", "3"}).code == 2);
  CHECK(run({"group-order", "--family", "B", "--n", "3"}).code == 2);
  CHECK(run({"serve"}).code == 2);
}
