#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef CMREG_CLI_PATH
#error "CMREG_CLI_PATH must point at the built cmreg binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

fs::path scratch_file(const std::string& stem, const std::string& content) {
  static int counter = 0;
  fs::path path = fs::temp_directory_path() /
                  ("cmreg_" + std::to_string(getpid()) + "_" + stem + "_" +
                   std::to_string(counter++) + ".txt");
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

CliResult run_cli(const std::string& args, const std::string& stdin_text = "") {
  fs::path in = scratch_file("stdin", stdin_text);
  std::string command = std::string(CMREG_CLI_PATH) + " " + args + " < " +
                        in.string() + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  int status = pclose(pipe);
  fs::remove(in);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

const char* kSquareEdges = "4\n1 2\n2 3\n3 4\n1 4\n";
const char* kSevenCycleEdges = "7\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n1 7\n";
const char* kGluedSquaresEdges = "6\n1 2\n2 3\n3 4\n1 4\n4 5\n5 6\n3 6\n";
const char* kHouseEdges = "5\n1 2\n2 3\n1 3\n3 4\n4 5\n1 5\n";

}  // namespace

TEST_CASE("reg reads edge lists from stdin") {
  auto result = run_cli("reg -", kSquareEdges);
  CHECK(result.exit_code == 0);
  CHECK(result.out == "reg = 3\n");
}

TEST_CASE("reg reads graph6 files and prints traces") {
  fs::path g6 = scratch_file("square", "Cl\n");
  auto result = run_cli("reg " + g6.string() + " --trace --verify");
  fs::remove(g6);
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("reg = 3\n") == 0);
  CHECK(result.out.find("step 1: base-cycle length=4") != std::string::npos);
  CHECK(result.out.find("  [Cl]") != std::string::npos);
  CHECK(result.out.find("verified") != std::string::npos);
  CHECK(result.out.find("oracle agreement: ok") != std::string::npos);
}

TEST_CASE("reg on a complete graph reports a null value") {
  auto result = run_cli("reg - --format graph6", "Bw\n");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "reg = null (complete graph: zero ideal)\n");
}

TEST_CASE("reg emits machine-readable json") {
  auto compact = run_cli("reg - --output json --verify", kSquareEdges);
  CHECK(compact.exit_code == 0);
  json payload = json::parse(compact.out);
  CHECK(payload["reg"] == 3);
  CHECK(payload["oracle_reg"] == 3);
  CHECK(payload["consistent"] == true);
  CHECK(!payload.contains("steps"));
  CHECK(payload["flags"].is_array());

  auto traced = run_cli("reg - --output json --trace", kSevenCycleEdges);
  CHECK(traced.exit_code == 0);
  json steps = json::parse(traced.out)["steps"];
  REQUIRE(steps.size() == 4);
  CHECK(steps[0]["rule"] == "smooth");
  CHECK(steps[0]["w"] == 1);
  CHECK(steps[3]["rule"] == "base-cycle");
  CHECK(steps[3]["n"] == 4);
}

TEST_CASE("reg honors the separator cap") {
  auto split = run_cli("reg - --trace", kGluedSquaresEdges);
  CHECK(split.exit_code == 0);
  CHECK(split.out.find("step 1: split") != std::string::npos);

  auto capped = run_cli("reg - --trace --separator-cap 1", kGluedSquaresEdges);
  CHECK(capped.exit_code == 0);
  CHECK(capped.out.find("reg = 3\n") == 0);
  CHECK(capped.out.find("step 1: fallback-oracle") != std::string::npos);
}

TEST_CASE("betti prints the table of the complement edge ideal") {
  auto result = run_cli("betti -", kSquareEdges);
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "ambient n = 4, field = Q\n"
        "beta(0,2) = 2\n"
        "beta(1,4) = 1\n"
        "reg = 3\n"
        "pd = 1\n"
        "depth S/I = 2\n"
        "dim S/I = 2\n"
        "Cohen-Macaulay = yes\n"
        "linear resolution = no\n");
}

TEST_CASE("betti accepts ideals directly") {
  auto result = run_cli("betti --ideal '(x1x2, x2x3)' --output json");
  CHECK(result.exit_code == 0);
  json payload = json::parse(result.out);
  CHECK(payload["n"] == 3);
  CHECK(payload["reg"] == 2);
  CHECK(payload["pd"] == 1);
  CHECK(payload["depth"] == 1);
  CHECK(payload["dim"] == 2);
  CHECK(payload["linear"] == true);
  json expected = json::array({json{{"i", 0}, {"j", 2}, {"beta", 2}},
                               json{{"i", 1}, {"j", 3}, {"beta", 1}}});
  CHECK(payload["entries"] == expected);

  auto from_stdin = run_cli("betti - --format ideal", "(x1x3, x2x4)\n");
  CHECK(from_stdin.exit_code == 0);
  CHECK(from_stdin.out.find("reg = 3\n") != std::string::npos);
}

TEST_CASE("betti rejects ambiguous input") {
  CHECK(run_cli("betti - --ideal '(x1x2)'", kSquareEdges).exit_code == 2);
  CHECK(run_cli("betti").exit_code == 2);
}

TEST_CASE("dual lists the minimal transversals") {
  auto result = run_cli("dual --ideal '(x1x2, x2x3)'");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "ambient n = 3\n2\n1 3\n");

  auto as_json = run_cli("dual --ideal '(x1x2, x2x3)' --output json");
  CHECK(as_json.exit_code == 0);
  json payload = json::parse(as_json.out);
  CHECK(payload["n"] == 3);
  CHECK(payload["gens"] == json::array({json::array({2}), json::array({1, 3})}));
}

TEST_CASE("help exits cleanly") {
  auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(!help.out.empty());
}

TEST_CASE("chordal prints certificates both ways") {
  auto chordal = run_cli("chordal -", "4\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  CHECK(chordal.exit_code == 0);
  CHECK(chordal.out.find("chordal: yes\nelimination order: ") == 0);

  auto cycle = run_cli("chordal - --output json", kHouseEdges);
  CHECK(cycle.exit_code == 0);
  json payload = json::parse(cycle.out);
  CHECK(payload["chordal"] == false);
  CHECK(payload["chordless_cycle"] == json::array({1, 3, 4, 5}));
}

TEST_CASE("verify runs the built-in suites") {
  auto cycles = run_cli("verify cycles --output json");
  CHECK(cycles.exit_code == 0);
  json payload = json::parse(cycles.out);
  CHECK(payload["suite"] == "cycles");
  CHECK(payload["checked"] == 6);
  CHECK(payload["failed"] == 0);
  CHECK(payload["passed"] == true);

  auto froberg = run_cli("verify froberg --max-n 4 --output json");
  CHECK(froberg.exit_code == 0);
  json fr = json::parse(froberg.out);
  CHECK(fr["checked"] == 74);  // all labeled graphs on 2, 3, and 4 vertices
  CHECK(fr["failed"] == 0);
  CHECK(fr["notes"][0] == "fields: Q GF(2)");
}

TEST_CASE("verify checks user-supplied graph streams") {
  fs::path stream = scratch_file("stream", "Cl\nBw\nCr\n");
  auto froberg = run_cli("verify froberg --graphs " + stream.string() + " --output json");
  CHECK(froberg.exit_code == 0);
  json payload = json::parse(froberg.out);
  CHECK(payload["suite"] == "froberg (stream)");
  CHECK(payload["checked"] == 3);
  CHECK(payload["failed"] == 0);

  auto reductions = run_cli("verify reductions --graphs " + stream.string());
  CHECK(reductions.exit_code == 0);
  CHECK(reductions.out.find("suite: reductions (stream)\nchecked: 3\nfailed: 0\n") == 0);
  CHECK(reductions.out.find("PASS\n") != std::string::npos);

  CHECK(run_cli("verify cycles --graphs " + stream.string()).exit_code == 2);
  fs::remove(stream);
}

TEST_CASE("usage problems exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("reg").exit_code == 2);
  CHECK(run_cli("reg - --output yaml", kSquareEdges).exit_code == 2);
  CHECK(run_cli("reg - --field gf7", kSquareEdges).exit_code == 2);
  CHECK(run_cli("verify no-such-suite").exit_code == 2);
  CHECK(run_cli("verify froberg --max-n 40").exit_code == 2);
  CHECK(run_cli("dual --ideal '()'").exit_code == 2);
}

TEST_CASE("parse failures exit with code 2") {
  CHECK(run_cli("reg - --format graph6", "B@\n").exit_code == 2);
  CHECK(run_cli("reg -", "3\n1 4\n").exit_code == 2);
  CHECK(run_cli("reg nonexistent-file.g6").exit_code == 2);
}
