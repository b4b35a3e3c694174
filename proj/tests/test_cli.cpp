#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PLRC_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/plrc_cli_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) lines.push_back(line);
  return lines;
}

const char* kGoldenLine = "8 7 1 2 6 4 4 3 5 1 6 1\n";

}  // namespace

TEST_CASE("cli: longest") {
  const std::string path = write_temp("golden.txt", kGoldenLine);
  RunResult res = run_cli("longest -k 3 " + path);
  REQUIRE(res.exit_code == 0);
  json out = json::parse(res.out);
  CHECK(out["length"] == 10);
  CHECK(out["witness"].size() == 10);

  RunResult no_witness = run_cli("longest -k 3 --no-witness " + path);
  json out2 = json::parse(no_witness.out);
  CHECK_FALSE(out2.contains("witness"));

  RunResult text = run_cli("longest -k 3 --format text " + path);
  CHECK(text.out.substr(0, 2) == "10");
}

TEST_CASE("cli: count") {
  const std::string path = write_temp("golden2.txt", kGoldenLine);
  RunResult res = run_cli("count -k 3 " + path);
  REQUIRE(res.exit_code == 0);
  json out = json::parse(res.out);
  CHECK(out["length"] == 10);
  CHECK(out["count"] == "2");  // decimal string
}

TEST_CASE("cli: batch input with jobs") {
  const std::string path = write_temp("batch.txt", "1 2 3\n3 2 1 2 3\n1 1 1\n");
  RunResult res = run_cli("longest -k 3 --jobs 3 " + path);
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 3);
  CHECK(json::parse(lines[0])["length"] == 3);
  CHECK(json::parse(lines[1])["length"] == 5);
  CHECK(json::parse(lines[2])["length"] == 0);

  RunResult serial = run_cli("longest -k 3 " + path);
  CHECK(res.out == serial.out);  // byte-deterministic regardless of jobs
}

TEST_CASE("cli: enumerate honors the limit") {
  const std::string path = write_temp("enum.txt", kGoldenLine);
  RunResult res = run_cli("enumerate -k 3 " + path);
  REQUIRE(res.exit_code == 0);
  auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 2);
  CHECK(json::parse(lines[0]) == json::parse("[8,7,1,2,6,4,4,3,1,1]"));
  CHECK(json::parse(lines[1]) == json::parse("[8,7,1,2,6,4,4,3,5,6]"));

  RunResult limited = run_cli("enumerate -k 3 --limit 1 " + path);
  CHECK(lines_of(limited.out).size() == 1);
}

TEST_CASE("cli: lcr") {
  const std::string path = write_temp("lcr.txt", "1 2 3\n1 2 3\n");
  RunResult res = run_cli("lcr -k 3 " + path);
  REQUIRE(res.exit_code == 0);
  json out = json::parse(res.out);
  CHECK(out["length"] == 3);
  CHECK(out["witness"] == json::parse("[1,2,3]"));

  const std::string five = write_temp("lcr5.txt", "1 2 3\n1 2 3\n1 2 3\n1 2 3\n1 2 3\n");
  CHECK(run_cli("lcr -k 3 " + five).exit_code == 2);

  const std::string one = write_temp("lcr1.txt", "1 2 3\n");
  CHECK(run_cli("lcr -k 3 " + one).exit_code == 1);

  // a pair of words whose grid cannot fit in one kilobyte
  std::string big_line;
  for (int i = 0; i < 64; ++i) big_line += "1 2 3 ";
  const std::string big = write_temp("lcr_big.txt", big_line + "\n" + big_line + "\n");
  CHECK(run_cli("lcr -k 3 --memory-budget 1024 " + big).exit_code == 2);
}

TEST_CASE("cli: validate") {
  const std::string path = write_temp("validate.txt", "1 2 3 4 5 4 3 5 6 6 7\nacb\n");
  RunResult res = run_cli("validate -k 3 " + path);
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 2);
  json first = json::parse(lines[0]);
  CHECK(first["is_rollercoaster"] == true);
  CHECK(first["runs"].size() == 3);
  CHECK(first["runs"][0]["orientation"] == "up");
  // "acb" -> 1 3 2: two runs, neither with 3 distinct letters
  json second = json::parse(lines[1]);
  CHECK(second["is_rollercoaster"] == false);
}

TEST_CASE("cli: neg edge dump and dot") {
  const std::string path = write_temp("neg.txt", "1 2 1\n");
  RunResult res = run_cli("neg " + path);
  REQUIRE(res.exit_code == 0);
  CHECK(res.out == "1 2 UP\n1 3 EQ\n2 3 DOWN\n");

  RunResult dot = run_cli("neg --dot " + path);
  CHECK(dot.out.find("digraph") != std::string::npos);
  CHECK(dot.out.find("DOWN") != std::string::npos);
}

TEST_CASE("cli: oracle-check") {
  const std::string path = write_temp("oracle.txt", kGoldenLine);
  RunResult res = run_cli("oracle-check -k 3 " + path);
  REQUIRE(res.exit_code == 0);
  CHECK(json::parse(res.out)["agree"] == true);

  // beyond the oracle cap -> resource exit code
  const std::string big =
      write_temp("oracle_big.txt", "1 2 3 1 2 3 1 2 3 1 2 3 1 2 3 1 2 3\n");
  CHECK(run_cli("oracle-check -k 3 " + big).exit_code == 2);
}

TEST_CASE("cli: k gating and parse errors") {
  const std::string path = write_temp("gate.txt", "1 2 3\n");
  CHECK(run_cli("longest -k 2 " + path).exit_code == 1);
  CHECK(run_cli("longest -k 2 --allow-small-k " + path).exit_code == 0);
  CHECK(run_cli("longest -k 0 --allow-small-k " + path).exit_code == 1);

  const std::string bad = write_temp("bad.txt", "12 ab\n");
  CHECK(run_cli("longest -k 3 " + bad).exit_code == 1);

  const std::string empty = write_temp("empty.txt", "");
  RunResult res = run_cli("longest -k 3 " + empty);
  CHECK(res.exit_code == 0);
  CHECK(res.out.empty());

  CHECK(run_cli("longest -k 3 /nonexistent/path").exit_code == 1);
}
