#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "billiards/io.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace billiards;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>/tmp/cli_stderr.txt";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string read_stderr() {
  std::ifstream in("/tmp/cli_stderr.txt");
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return s;
}

std::string write_tmp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("cli beta on the equilateral triangle") {
  std::string path = write_tmp(
      "equilateral.json", "{\"vertices\": [[0, 0], [1, 0], [0.5, 0.86602540378443865]]}");
  RunResult r = run_cli("beta " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"beta\": 12") != std::string::npos);
}

TEST_CASE("cli rejects degenerate input with exit code 1") {
  std::string path = write_tmp("bad.json", "{\"vertices\": [[0, 0], [1, 0]]}");
  RunResult r = run_cli("alpha " + path);
  CHECK(r.exit_code == 1);
  CHECK(read_stderr().find("DegenerateInput") != std::string::npos);

  RunResult r2 = run_cli("alpha /tmp/definitely_missing_file.json");
  CHECK(r2.exit_code == 1);

  RunResult r3 = run_cli("beta " + path + " --no-such-flag");
  CHECK(r3.exit_code != 0);
}

TEST_CASE("cli output is byte-identical across runs") {
  std::string path = write_tmp(
      "hexagon.json",
      "{\"vertices\": [[1,0],[0.5,0.8660254037844386],[-0.5,0.8660254037844386],[-1,0],"
      "[-0.5,-0.8660254037844386],[0.5,-0.8660254037844386]]}");
  RunResult a = run_cli("alpha " + path + " --oracle 60");
  RunResult b = run_cli("alpha " + path + " --oracle 60");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli santalo on the hexagon") {
  std::string path = write_tmp(
      "hexagon.json",
      "{\"vertices\": [[1,0],[0.5,0.8660254037844386],[-0.5,0.8660254037844386],[-1,0],"
      "[-0.5,-0.8660254037844386],[0.5,-0.8660254037844386]]}");
  RunResult r = run_cli("santalo " + path + " --grid 60");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"min\": 4") != std::string::npos);
}

TEST_CASE("cli dual emits half-plane form for outside centers") {
  std::string path = write_tmp("sq.json", "{\"vertices\": [[0,0],[1,0],[1,1],[0,1]]}");
  RunResult in = run_cli("dual " + path + " --z 0.5,0.5");
  CHECK(in.exit_code == 0);
  CHECK(in.out.find("\"bounded\": true") != std::string::npos);

  RunResult out = run_cli("dual " + path + " --z 5,5");
  CHECK(out.exit_code == 0);
  CHECK(out.out.find("\"bounded\": false") != std::string::npos);
  CHECK(out.out.find("halfplanes") != std::string::npos);
}

TEST_CASE("cli svg output is well-formed and labeled") {
  std::string path = write_tmp(
      "equilateral.json", "{\"vertices\": [[0, 0], [1, 0], [0.5, 0.86602540378443865]]}");
  RunResult r = run_cli("alpha " + path + " --svg /tmp/orbit.svg");
  CHECK(r.exit_code == 0);
  std::ifstream svg("/tmp/orbit.svg");
  std::string s((std::istreambuf_iterator<char>(svg)), std::istreambuf_iterator<char>());
  CHECK(s.find("<?xml") == 0);
  CHECK(s.find("id=\"polygon\"") != std::string::npos);
  CHECK(s.find("id=\"orbit\"") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
}

TEST_CASE("cli table csv") {
  RunResult r = run_cli("table --max-n 6 --csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,alpha,diam,beta") == 0);
  CHECK(r.out.find("\n3,") != std::string::npos);
  CHECK(r.out.find("\n6,") != std::string::npos);
}

TEST_CASE("cli verify runs a small suite") {
  RunResult r = run_cli("verify --suite involution --seed 3 --cases 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("warning when input is not hull-ordered") {
  std::string path = write_tmp("scrambled.json", "{\"vertices\": [[0,0],[1,1],[1,0],[0,1]]}");
  RunResult r = run_cli("beta " + path);
  CHECK(r.exit_code == 0);
  CHECK(read_stderr().find("reordered") != std::string::npos);
}

TEST_CASE("number formatting uses 12 significant digits") {
  CHECK(io::format_number(12.0) == "12");
  CHECK(io::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(io::format_number(8.0 / std::sqrt(2.0)) == "5.65685424949");
}
