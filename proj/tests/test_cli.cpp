#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary_path() {
  const char* p = std::getenv("SPRINGERK_BIN");
  REQUIRE_MESSAGE(p != nullptr, "SPRINGERK_BIN must point at the executable");
  return p;
}

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += binary_path() + " " + args;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("present text lists the generators") {
  auto r = run("present --lambda 2,1 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "flavor: EqK"));
  CHECK(contains(r.out, "lambda: 2,1"));
  CHECK(contains(r.out, "generators: 6"));
  CHECK(contains(r.out, "[s=3 subset={1,2,3} d=1]"));
}

TEST_CASE("present json is machine readable") {
  auto r = run("present --lambda 2,1 --format json 2>/dev/null");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["flavor"] == "EqK");
  CHECK(j["n"] == 3);
  CHECK(j["generators"].size() == 6);
  CHECK(j["ambient"]["invertible"].size() == 1);
  CHECK(j["dropped"].empty());
}

TEST_CASE("flag flavor needs no partition blocks") {
  auto r = run("present --lambda 1,1 --flavor Flag --format json 2>/dev/null");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK_FALSE(j.contains("lambda"));
  CHECK(j["generators"].size() == 2);
}

TEST_CASE("cohomology display renames the variables") {
  auto r = run("present --lambda 2,1 --flavor EqCoh 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "y1"));
  CHECK_FALSE(contains(r.out, "x1"));
}

TEST_CASE("fixed point listing") {
  auto r = run("fixed-points --lambda 2,1 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "count: 3"));
  CHECK(contains(r.out, "3,1,2"));

  auto j = nlohmann::json::parse(
      run("fixed-points --lambda 2,1 --format json 2>/dev/null").out);
  CHECK(j["count"] == 3);
  REQUIRE(j["fixed_points"].size() == 3);
  CHECK(j["fixed_points"][0] == nlohmann::json({1, 2, 3}));
}

TEST_CASE("rank agrees with the fixed point count") {
  auto r = run("rank --lambda 2,1 --format json 2>/dev/null");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["check"] == "generic_rank");
  CHECK(j["expected"] == "3");
  CHECK(j["got"] == "3");
  CHECK(j["seed"] == 17);
  CHECK(j["pass"] == true);
  CHECK_FALSE(j.contains("elapsed_ms"));
}

TEST_CASE("rank exposes timing when asked") {
  auto r = run("rank --lambda 2,1 --format json --timings 2>/dev/null");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("an unmet expectation fails the run") {
  auto r = run("rank --lambda 2,1 --expect 5 2>/dev/null");
  CHECK(r.exit_code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("rank --lambda '2,,1' 2>/dev/null").exit_code == 2);
  CHECK(run("rank --lambda 0,1 2>/dev/null").exit_code == 2);
  CHECK(run("present --lambda 2,1 --flavor Bogus 2>/dev/null").exit_code == 2);
  CHECK(run("2>/dev/null").exit_code != 0);
  CHECK(run("rank 2>/dev/null").exit_code == 2);  // missing --lambda
}

TEST_CASE("unsorted parts are canonicalized with a warning") {
  auto warned = run("rank --lambda 1,2 --format json 2>&1");
  CHECK(warned.exit_code == 0);
  CHECK(contains(warned.out, "note: lambda reordered to 2,1"));
  auto quiet = run("rank --lambda 1,2 --format json 2>/dev/null");
  CHECK_FALSE(contains(quiet.out, "note:"));
  auto j = nlohmann::json::parse(quiet.out);
  CHECK(j["lambda"] == nlohmann::json({2, 1}));
}

TEST_CASE("verify suite runs clean") {
  auto r = run("verify --lambda 2,1 --suite identities 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "result: PASS"));
}

TEST_CASE("verify json carries one record per check") {
  auto r = run("verify --lambda 2,1 --suite gkm --format json 2>/dev/null");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "gkm");
  CHECK(j["pass"] == true);
  REQUIRE(j["results"].size() == 2);
  for (const auto& rec : j["results"]) {
    CHECK(rec["pass"] == true);
    CHECK(rec.contains("check"));
    CHECK(rec.contains("expected"));
    CHECK(rec.contains("got"));
  }
}

TEST_CASE("unknown suite names are rejected") {
  CHECK(run("verify --lambda 2,1 --suite nope 2>/dev/null").exit_code == 2);
}

TEST_CASE("basis lists the standard monomials") {
  auto r = run("basis --lambda 3 --format json 2>/dev/null");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["check"] == "standard_monomial_basis");
  CHECK(j["count"] == 1);
  CHECK(j["basis"] == nlohmann::json({"1"}));
}

TEST_CASE("output bytes are deterministic") {
  std::string cmd = "verify --lambda 2,2 --suite rank --format json 2>/dev/null";
  auto a = run(cmd);
  auto b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("seed can come from the environment") {
  auto j = nlohmann::json::parse(
      run("rank --lambda 2,1 --format json 2>/dev/null", "SPRINGER_K_SEED=99")
          .out);
  CHECK(j["seed"] == 99);
  // an explicit flag wins over the environment
  auto k = nlohmann::json::parse(
      run("rank --lambda 2,1 --seed 5 --format json 2>/dev/null",
          "SPRINGER_K_SEED=99")
          .out);
  CHECK(k["seed"] == 5);
}

}  // TEST_SUITE
