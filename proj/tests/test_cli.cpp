#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "starfree/graph.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

void write_tmp(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("cli: gen, solve, oracle, check round trip") {
  const std::string dir = "/tmp/starfree_cli_test";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);

  auto gen = run_cli("gen complete -n 4 -o " + dir + "/k4.txt");
  CHECK(gen.code == 0);

  // two triangles joined by a bridge
  write_tmp(dir + "/tt.txt", "6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n");

  auto solve = run_cli("solve fvs " + dir + "/tt.txt --json");
  CHECK(solve.code == 0);
  CHECK(solve.out.find("\"value\":2") != std::string::npos);

  auto oracle = run_cli("oracle fvs " + dir + "/tt.txt --json");
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("\"value\":2") != std::string::npos);

  auto mc = run_cli("solve matchingcut " + dir + "/tt.txt");
  CHECK(mc.code == 0);  // yes instance
  auto mc_no = run_cli("solve matchingcut " + dir + "/k4.txt");
  CHECK(mc_no.code == 1);  // decision no

  // disconnected matching cut input: validation error
  write_tmp(dir + "/disc.txt", "4\n0 1\n2 3\n");
  CHECK(run_cli("solve matchingcut " + dir + "/disc.txt").code == 2);

  // spider check: K4 is S_{1,1,1,1}-free (max degree 3)
  auto chk = run_cli("check " + dir + "/k4.txt --spider 1,1,1,1");
  CHECK(chk.code == 0);
  CHECK(chk.out.find("FREE") != std::string::npos);
  auto chk2 = run_cli("check " + dir + "/tt.txt --spider 1,1,1,1");
  CHECK(chk2.code == 0);

  // capacity error surfaces as exit 3
  auto big = run_cli("gen cycle -n 30 -o " + dir + "/c30.txt");
  CHECK(big.code == 0);
  CHECK(run_cli("oracle fvs " + dir + "/c30.txt").code == 3);

  // ifvs on K4: no solution
  CHECK(run_cli("solve ifvs " + dir + "/k4.txt").code == 1);
}

TEST_CASE("cli: reduce and verify-reduction") {
  const std::string dir = "/tmp/starfree_cli_test";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  write_tmp(dir + "/f.cnf", "p cnf 2 3\n1 2 0\n1 -2 0\n2 -1 0\n");

  auto red = run_cli("reduce " + dir + "/f.cnf -o " + dir + "/f.graph");
  CHECK(red.code == 0);
  std::ifstream sidecar(dir + "/f.graph.json");
  REQUIRE(sidecar.good());
  std::string sidecar_text((std::istreambuf_iterator<char>(sidecar)),
                           std::istreambuf_iterator<char>());
  CHECK(sidecar_text.find("\"threshold\": 8") != std::string::npos);

  auto chk = run_cli("check " + dir + "/f.graph --spider 2,2,2,2");
  CHECK(chk.code == 0);
  CHECK(chk.out.find("FREE") != std::string::npos);

  auto ver = run_cli("verify-reduction " + dir + "/f.cnf --json");
  CHECK(ver.code == 0);
  CHECK(ver.out.find("\"equivalenceHolds\":true") != std::string::npos);

  // malformed formula: exit 2
  write_tmp(dir + "/bad.cnf", "p cnf 1 1\n1 0\n");
  CHECK(run_cli("verify-reduction " + dir + "/bad.cnf").code == 2);
}

TEST_CASE("cli: json reports re-serialize byte-identically") {
  const std::string dir = "/tmp/starfree_cli_test";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  write_tmp(dir + "/tt.txt", "6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n");
  auto a = run_cli("solve cvc " + dir + "/tt.txt --json");
  auto b = run_cli("solve cvc " + dir + "/tt.txt --json");
  CHECK(a.code == 0);
  CHECK_FALSE(a.out.empty());
  // determinism is part of the contract; timings are excluded from it
  auto strip = [](std::string s) {
    const auto at = s.find("\"timeMs\"");
    if (at != std::string::npos) {
      auto end = s.find_first_of(",}", at);
      s.erase(at, end - at);
    }
    return s;
  };
  CHECK(strip(a.out) == strip(b.out));

  // parse -> dump reproduces the emitted bytes (keys stay sorted)
  const std::string line = a.out.substr(0, a.out.find('\n'));
  CHECK(nlohmann::json::parse(line).dump() == line);
}
