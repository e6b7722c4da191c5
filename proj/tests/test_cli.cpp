#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "stirling/grammar.hpp"
#include "stirling/io.hpp"
#include "stirling/sp_code.hpp"

namespace {

using nlohmann::json;

struct CliResult {
  std::string out;
  int code = -1;
};

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "stirling_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

// stdout only; stderr is discarded.
CliResult run(const std::string& args, const std::string& input = "") {
  const auto in = scratch("stdin.txt");
  std::ofstream(in) << input;
  const std::string cmd = std::string(STIRLING_CLI) + " " + args + " < " + in.string() + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

TEST(Cli, EnumerateSecondOrder) {
  const CliResult r = run("enumerate --object stirling --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[1,1,2,2]\n[1,2,2,1]\n[2,2,1,1]\n");
  EXPECT_EQ(run("enumerate --object stirling --n 2 --format text").out, "1122\n1221\n2211\n");
  EXPECT_EQ(run("enumerate --object code --n 5").out.size() > 0, true);
  int lines = 0;
  for (char c : run("enumerate --object matching --n 5").out) lines += c == '\n';
  EXPECT_EQ(lines, 945);
}

TEST(Cli, EnumerateCapIsUsageError) {
  EXPECT_EQ(run("enumerate --object stirling --n 8 --cap 10").code, 2);
}

TEST(Cli, ConvertWorkedExample) {
  const CliResult r = run("convert --from stirling --to code", "[5,5,1,4,4,3,3,1,2,6,6,2]");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trim(r.out), "[[0,0],[1,3],[1,2],[3,1],[1,1],[2,2]]");
}

// X -> Y -> X reproduces the input bytes for every pair of kinds.
TEST(Cli, ConvertRoundTripsAreByteExact) {
  const std::vector<std::string> kinds{"stirling", "code", "tree", "riordan", "dumont", "matching"};
  for (const auto& c : stirling::all_codes(3)) {
    for (const auto& from : kinds) {
      const std::string x = stirling::dump_object(stirling::convert(c, stirling::object_from_name(from)));
      for (const auto& to : kinds) {
        const CliResult there = run("convert --from " + from + " --to " + to, x);
        ASSERT_EQ(there.code, 0) << from << "->" << to;
        const CliResult back = run("convert --from " + to + " --to " + from, there.out);
        ASSERT_EQ(back.code, 0);
        EXPECT_EQ(trim(back.out), x) << from << "->" << to;
      }
    }
  }
}

TEST(Cli, ConvertRejectsBadInput) {
  EXPECT_EQ(run("convert --from stirling --to code", "[2,1,1,2]").code, 2);
  EXPECT_EQ(run("convert --from stirling --to code", "[1,1,").code, 2);
  EXPECT_EQ(run("convert --from plane-tree --to code", "{\"label\":1,\"children\":[]}").code, 2);
  EXPECT_EQ(run("convert --from widget --to code", "[1,1]").code, 2);
}

TEST(Cli, Stats) {
  const CliResult r = run("stats", "[1,2,3,3,2,1]");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["stats"]["ud"], 2);
  EXPECT_EQ(j["stats"]["eud"], 3);
  EXPECT_EQ(j["stats"]["Asc"], json({1, 2, 3}));
  const CliResult k4 = run("stats --k 4", "[1,1,1,2,2,3,3,3,3,2,2,1]");
  ASSERT_EQ(k4.code, 0);
  const json j4 = json::parse(k4.out);
  EXPECT_EQ(j4["stats"]["plat_1"], 3);
  EXPECT_EQ(j4["stats"]["plat_2"], 2);
  EXPECT_EQ(j4["stats"]["plat_3"], 2);
}

TEST(Cli, Poly) {
  EXPECT_EQ(trim(run("poly --family C --n 3").out), "6*x^3 + 8*x^2 + x");
  EXPECT_EQ(trim(run("poly --family A --n 2").out), "x^2 + x");
  EXPECT_EQ(trim(run("poly --family N3 --n 3 --ebasis").out), "w1^2*w3 + 6*w3^2");
  const CliResult j = run("poly --family C3 --n 2 --format json");
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(stirling::parse_polynomial_json(j.out), stirling::poly_C3(2));
  EXPECT_EQ(run("poly --family Q --n 2").code, 2);
}

TEST(Cli, Gamma) {
  const CliResult r = run("gamma --n 3 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "i,j,k,gamma\n0,2,1,1\n1,0,2,2\n");
  EXPECT_EQ(run("gamma --n 5 --k 2").code, 2);
  EXPECT_EQ(run("gamma --n 4 --k 2 --format csv").out, "i1,i2,i3,i4,gamma\n1,3,0,0,1\n2,1,1,0,8\n3,0,0,1,6\n");
}

TEST(Cli, Grammar) {
  const auto rules = scratch("rules.txt");
  std::ofstream(rules) << "# Dumont\nx -> x*y*z\ny -> x*y*z\nz -> x*y*z\n";
  const CliResult r = run("grammar --rules " + rules.string() + " --start x --iterate 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(stirling::parse_polynomial(trim(r.out)), stirling::poly_C3(2));
  const CliResult h = run("grammar --builtin H --start w --iterate 3");
  EXPECT_EQ(stirling::parse_polynomial(trim(h.out)), stirling::parse_polynomial("v^3*w + 8*u*v*w^2 + 6*w^3"));
  std::ofstream(rules) << "x -> y\n";
  EXPECT_EQ(run("grammar --rules " + rules.string() + " --start x --iterate 1").code, 2);
}

TEST(Cli, VerifyExitCodes) {
  const CliResult bona = run("verify --theorem bona --max-n 6");
  EXPECT_EQ(bona.code, 0);
  const CliResult j = run("verify --theorem thm37 --max-n 5 --format json");
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(json::parse(j.out)["passed"].get<bool>());
  EXPECT_EQ(run("verify --theorem nope").code, 2);
  EXPECT_EQ(run("verify --theorem bona --k 3").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("enumerate --object stirling --n 2 --bogus").code, 2);
  EXPECT_EQ(run("enumerate --object stirling").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

}  // namespace
