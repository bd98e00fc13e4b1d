#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "torquad/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TORQUAD_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    output.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("build subcommand") {
  fs::remove_all("cli_build");
  auto r = run_cli("build --n 3 --k 3 --out cli_build");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "V=9 E=18 F=9"));
  CHECK(fs::exists("cli_build/q_3_3.json"));
  CHECK(fs::exists("cli_build/duoprism_3_3.json"));

  SUBCASE("repeated runs are byte-identical") {
    std::string first = torquad::read_file("cli_build/q_3_3.json");
    auto again = run_cli("build --n 3 --k 3 --out cli_build");
    CHECK(again.exit_code == 0);
    CHECK(torquad::read_file("cli_build/q_3_3.json") == first);
  }

  SUBCASE("n below 3 is a usage error") {
    auto bad = run_cli("build --n 2 --k 5");
    CHECK(bad.exit_code != 0);
    CHECK(contains(bad.output, "at least 3"));
  }
}

TEST_CASE("aut subcommand") {
  auto r = run_cli("aut --n 4 --k 4 --out cli_aut.json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "graph order 384"));
  CHECK(contains(r.output, "cellular order 128"));
  CHECK(fs::exists("cli_aut.json"));
}

TEST_CASE("verify subcommand") {
  SUBCASE("(4,4) passes as regular") {
    auto r = run_cli("verify --n 4 --k 4 --out cli_verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "status: PASS"));
    CHECK(contains(r.output, "order 128, regular, 3 copies check: n/a"));
    CHECK(fs::exists("cli_verify/certificate_4_4.json"));
    CHECK(fs::exists("cli_verify/certificate_4_4.txt"));
  }

  SUBCASE("(3,5) passes as noble with 2 edge orbits") {
    auto r = run_cli("verify --n 3 --k 5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "noble, 2 edge orbits"));
  }

  SUBCASE("tampered coordinates file fails with a residual report") {
    auto made = run_cli("realize --n 3 --k 4 --out cli_coords.json");
    REQUIRE(made.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(torquad::read_file("cli_coords.json"));
    double x = j["coords"][0][0].get<double>();
    j["coords"][0][0] = x + 1e-3;
    torquad::write_file("cli_tampered.json", j.dump(2) + "\n");

    auto r = run_cli("verify --coords cli_tampered.json");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "status: FAIL"));
    CHECK(contains(r.output, "max fit residual"));
  }

  SUBCASE("sweep emits one row per grid cell") {
    auto r = run_cli("verify --sweep 3..4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "  3   3"));
    CHECK(contains(r.output, "  4   4"));
    CHECK(contains(r.output, "regular"));
    CHECK(contains(r.output, "noble"));
  }
}

TEST_CASE("count-hypercube subcommand") {
  auto r = run_cli("count-hypercube");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "copies=3 ratio=3"));

  auto again = run_cli("count-hypercube");
  CHECK(again.output == r.output);
}

TEST_CASE("export subcommand") {
  auto off = run_cli("export --n 3 --k 5 --format off --out cli_export.off");
  CHECK(off.exit_code == 0);
  CHECK(torquad::read_file("cli_export.off").substr(0, 4) == "4OFF");

  auto text = run_cli("export --n 3 --k 5 --format text");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.output, "V=15 E=30 F=15"));
  CHECK(contains(text.output, "flags=120"));

  auto bad = run_cli("export --n 3 --k 5 --format bogus");
  CHECK(bad.exit_code == 2);
}
