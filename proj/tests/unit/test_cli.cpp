#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(THINNESS_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expect = 0) {
  Run r = run("--format json " + args);
  INFO(args << "\n" << r.out);
  CHECK(r.code == expect);
  return nlohmann::json::parse(r.out);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("thinness_cli_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("analyze") {
  nlohmann::json j = run_json("analyze --fixture fig1a --kind all");
  CHECK(j["thin"] == 2);
  CHECK(j["pthin"] == 3);
  CHECK(j.contains("thin_certificate"));
  Run text = run("analyze --fixture fig1b --kind pthin");
  CHECK(text.code == 0);
  CHECK(text.out.find("pthin=2") != std::string::npos);
  write_file(temp_path("p4.txt"), "4 3\n0 1\n1 2\n2 3\n");
  CHECK(run_json("analyze " + temp_path("p4.txt") + " --kind thin")["thin"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(run("analyze /nonexistent/file").code == 1);
  CHECK(run("analyze --fixture nonsense").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("analyze --fixture fig1a --kind pthin --nodes 3").code == 2);
  write_file(temp_path("bad_cert.json"), R"({"order":[1,0,2],"classes":[0,0,0],"k":1,"kind":"thin"})");
  write_file(temp_path("p3.txt"), "3 2\n0 1\n1 2\n");
  CHECK(run("order-check " + temp_path("p3.txt") + " --cert " + temp_path("bad_cert.json")).code == 3);
  CHECK(run("sweep --theorem pthin-le-bw --n 4").code == 0);
  CHECK(run("sweep --theorem char-ind-2-thin --n 6").code == 4);
}

TEST_CASE("order-check") {
  write_file(temp_path("p3.txt"), "3 2\n0 1\n1 2\n");
  nlohmann::json bad = run_json("order-check " + temp_path("p3.txt") + " --order 1,0,2 --classes 0,0,0", 3);
  CHECK(bad["valid"] == false);
  nlohmann::json ok = run_json("order-check " + temp_path("p3.txt") + " --order 1,0,2");
  CHECK(ok["min_classes"] == 2);
}

TEST_CASE("extend") {
  write_file(temp_path("ceo.json"),
             R"({"graph":{"n":4,"edges":[[0,1],[1,2],[2,3]]},"classes":[0,1,0,1],"class_orders":[[0,2],[1,3]],"mode":"consistent"})");
  nlohmann::json j = run_json("extend " + temp_path("ceo.json"));
  CHECK(j["status"] == "feasible");
  CHECK(j["order"].size() == 4);
}

TEST_CASE("model round trip and checks") {
  const std::string out = temp_path("m1.json");
  CHECK(run("model --fixture fig1a --build m1 --output " + out).code == 0);
  nlohmann::json check = run_json("model --fixture fig1a --input " + out + " --check");
  CHECK(check["reproduces_graph"] == true);
  CHECK(check["diagonal"] == "two_diagonal");
  CHECK(check["blocking"]["ok"] == true);
  nlohmann::json g72 = run_json("model --fixture g72 --check");
  CHECK(g72["blocking"]["ok"] == false);
  nlohmann::json m4 = run_json("model --fixture fig1a --build m4 --check");
  CHECK(m4["max_bends"].get<int>() <= 1);
  CHECK(m4["corners_on_antidiagonal"] == true);
}

TEST_CASE("pattern, bounds, gallery") {
  nlohmann::json p = run_json("pattern --fixture cycle:6 --family P6789");
  CHECK(p["membership"]["status"] == "member");
  nlohmann::json b = run_json("bounds --fixture grid:3");
  CHECK(b["diameter"] == 4);
  nlohmann::json g = run_json("gallery fig1a");
  CHECK(g.dump().find("fig1a") != std::string::npos);
  CHECK(run("pattern --list").code == 0);
}

TEST_CASE("output is deterministic") {
  for (const std::string args : {"analyze --fixture fig1a --kind all", "bounds --fixture cycle:6",
                                 "pattern --fixture cycle:6 --classify", "sweep --theorem ceo --n 5 --samples 40"}) {
    Run a = run("--format json " + args), b = run("--format json " + args);
    CHECK(a.out == b.out);
    Run c = run(args), d = run(args);
    CHECK(c.out == d.out);
  }
}
