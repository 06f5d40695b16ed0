#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef FIBONOM_CLI_PATH
#error "FIBONOM_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(FIBONOM_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("eval single methods") {
  CHECK(run_cli("eval 5 0 --method product").out == "1\n");
  CHECK(run_cli("eval 10 3 --method bridge").out == "19635\n");
  CHECK(run_cli("eval 7 2 --method trudi").out == "104\n");
  CHECK(run_cli("eval 7 2 --method rowdet").out == "104\n");
}

TEST_CASE("eval all prints six agreeing lines") {
  auto r = run_cli("eval 7 3 --method all");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  for (const auto& line : lines) CHECK(line == "260");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("eval 3 7").exit_code == 2);
  CHECK(run_cli("eval 3 1 --method nosuch").exit_code == 2);
  CHECK(run_cli("triangle 0").exit_code == 2);
  CHECK(run_cli("cf diagonal 3 3").exit_code == 2);
  CHECK(run_cli("verify nosuchsuite").exit_code == 2);
  CHECK(run_cli("series nosuch 3 3").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("triangle rows") {
  auto r = run_cli("triangle 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n1 1\n1 1 1\n");

  auto r5 = run_cli("triangle 5");
  auto lines = lines_of(r5.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[4] == "1 3 6 3 1");

  auto r8 = run_cli("triangle 8");
  auto lines8 = lines_of(r8.out);
  REQUIRE(lines8.size() == 8);
  CHECK(lines8[7] == "1 13 104 260 260 104 13 1");
}

TEST_CASE("cf expansions") {
  auto row = run_cli("cf row 6 7");
  CHECK(row.exit_code == 0);
  auto lines = lines_of(row.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[3] == "coefficients: 1 -13 -104 260 260 -104 -13 1");

  auto col = run_cli("cf column 7 8");
  CHECK(col.exit_code == 0);
  auto col_lines = lines_of(col.out);
  CHECK(col_lines[3] ==
        "coefficients: 1 21 714 19635 582505 16776144 488605194 14169550626 "
        "411591708660");

  auto c0 = run_cli("cf column 0 3");
  CHECK(lines_of(c0.out)[3] == "coefficients: 1 1 1 1");
}

TEST_CASE("series subcommand") {
  auto row = run_cli("series row 7 7");
  CHECK(row.exit_code == 0);
  CHECK(lines_of(row.out)[0] ==
        "coefficients: 1 13 -104 -260 260 104 -13 -1");
  auto col = run_cli("series column 7 3");
  CHECK(lines_of(col.out)[0] == "coefficients: 1 21 714 19635");
}

TEST_CASE("verify exits cleanly and deterministically") {
  auto a = run_cli("verify zerosum --max-n 5");
  CHECK(a.exit_code == 0);
  auto b = run_cli("verify zerosum --max-n 5");
  CHECK(a.out == b.out);

  auto parallel = run_cli("verify methods --max-n 8 --jobs 4");
  auto serial = run_cli("verify methods --max-n 8");
  CHECK(parallel.exit_code == 0);
  CHECK(parallel.out == serial.out);
}

TEST_CASE("verify writes a machine-readable report") {
  const std::string path = "cli_report_test.json";
  auto r = run_cli("verify trudi --max-n 4 --report " + path);
  CHECK(r.exit_code == 0);

  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json doc = nlohmann::json::parse(in);
  CHECK(doc.contains("version"));
  CHECK(doc["summary"]["fail"].get<std::size_t>() == 0);
  CHECK(doc["summary"]["pass"].get<std::size_t>() > 0);
  CHECK(doc["entries"].is_array());
  // Large values are carried as strings.
  for (const auto& e : doc["entries"]) {
    CHECK(e["lhs"].is_string());
    CHECK(e["rhs"].is_string());
  }
  std::remove(path.c_str());
}

TEST_CASE("json output carries values as strings") {
  auto r = run_cli("eval 12 5 --method product --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["values"]["product"].is_string());
  CHECK(doc["values"]["product"].get<std::string>() == "16776144");
}
