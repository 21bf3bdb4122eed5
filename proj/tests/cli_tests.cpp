// End-to-end tests of the command-line tool, driven through the shell.
// NESTED2_BIN points at the binary, NESTED2_TMP at a scratch directory.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string bin() {
  const char* b = std::getenv("NESTED2_BIN");
  REQUIRE_MESSAGE(b != nullptr, "NESTED2_BIN must be set");
  return b;
}

std::string tmp_dir() {
  const char* d = std::getenv("NESTED2_TMP");
  return d ? d : ".";
}

std::string path(const std::string& name) { return tmp_dir() + "/" + name; }

int run(const std::string& args) {
  const std::string cmd = bin() + " " + args + " >" + path("stdout.txt") + " 2>" +
                          path("stderr.txt");
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary);
  out << bytes;
}

}  // namespace

TEST_CASE("gen then recognize then verify round trip") {
  REQUIRE(run("gen --family F2 --k 5 --out " + path("f25.txt")) == 0);
  CHECK(run("recognize --kind 2nested --input " + path("f25.txt") + " --cert " +
            path("f25.cert")) == 1);
  CHECK(run("verify --input " + path("f25.txt") + " --cert " + path("f25.cert")) == 0);

  SUBCASE("recognize accepts a nested instance") {
    spit(path("nested.txt"), "2 4\n1100\n0100\n");
    CHECK(run("recognize --kind nested --input " + path("nested.txt")) == 0);
  }
  SUBCASE("tampered certificate fails verification with exit 1") {
    std::string cert = slurp(path("f25.cert"));
    const auto pos = cert.find("rows 1 2 3 4 5");
    REQUIRE(pos != std::string::npos);
    cert.replace(pos, 14, "rows 1 2 3 4 4");
    spit(path("tampered.cert"), cert);
    CHECK(run("verify --input " + path("f25.txt") + " --cert " + path("tampered.cert")) ==
          1);
  }
  SUBCASE("certificate bound to a different input is exit 2") {
    REQUIRE(run("gen --family F1 --k 5 --out " + path("f15.txt")) == 0);
    CHECK(run("verify --input " + path("f15.txt") + " --cert " + path("f25.cert")) == 2);
  }
}

TEST_CASE("recognize exit codes") {
  SUBCASE("malformed input is exit 2") {
    spit(path("bad.txt"), "2 3\n11\n000\n");
    CHECK(run("recognize --kind c1p --input " + path("bad.txt")) == 2);
  }
  SUBCASE("missing file is exit 2") {
    CHECK(run("recognize --kind c1p --input " + path("does_not_exist.txt")) == 2);
  }
  SUBCASE("graph kinds parse graph files") {
    spit(path("gem.txt"), "5 7\n1 2\n1 5\n2 3\n2 5\n3 4\n3 5\n4 5\n");
    CHECK(run("recognize --kind nested-graph --input " + path("gem.txt")) == 1);
    CHECK(run("recognize --kind 2nested-graph --input " + path("gem.txt")) == 0);
  }
  SUBCASE("unknown kind is exit 2") {
    CHECK(run("recognize --kind banana --input " + path("f25.txt")) == 2);
  }
}

TEST_CASE("gen validation and determinism") {
  CHECK(run("gen --family F1 --k 4 --out " + path("bad_f1.txt")) == 2);
  CHECK(run("gen --family nosuch --out " + path("nope.txt")) == 2);

  REQUIRE(run("gen --family random --n 6 --m 7 --p 0.4 --seed 7 --out " + path("r1.txt")) ==
          0);
  REQUIRE(run("gen --family random --n 6 --m 7 --p 0.4 --seed 7 --out " + path("r2.txt")) ==
          0);
  CHECK(slurp(path("r1.txt")) == slurp(path("r2.txt")));

  REQUIRE(run("gen --family randomsplit --n 8 --seed 3 --out " + path("g1.txt")) == 0);
  CHECK(run("recognize --kind 2nested-graph --input " + path("g1.txt")) <= 1);
}

TEST_CASE("stress command") {
  SUBCASE("a seeded run passes") {
    CHECK(run("stress --count 300 --max-rows 5 --max-cols 5 --seed 12") == 0);
  }
  SUBCASE("count 0 passes trivially") {
    CHECK(run("stress --count 0") == 0);
  }
  SUBCASE("bounds above the oracle guards are exit 2") {
    CHECK(run("stress --count 10 --max-rows 13 --max-cols 5") == 2);
    CHECK(run("stress --count 10 --max-rows 5 --max-cols 9") == 2);
  }
}
