#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& exe, const std::string& args) {
  namespace fs = std::filesystem;
  static int counter = 0;
  const auto err_path = fs::temp_directory_path() / ("gwfloor_cli_err_" + std::to_string(::getpid()) + "_" +
                                                     std::to_string(counter++));
  const std::string cmd = "\"" + exe + "\" " + args + " 2>\"" + err_path.string() + "\"";
  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  fs::remove(err_path);
  return r;
}

RunResult cli(const std::string& args) { return run(GWFLOOR_CLI_PATH, args); }

}  // namespace

TEST(Cli, EnumerateDegreeThree) {
  auto r = cli("enumerate --degree 3");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], "gwfloor/1");
  EXPECT_EQ(j["count"], 9);
}

TEST(Cli, CountSymbolic) {
  auto r = cli("count --degree 3 --pairs 0");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rank"], 12);
}

TEST(Cli, CountRealNegative) {
  auto r = cli("count --degree 3 --pairs 1 --merge 2 --field real --signs -");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"]["signature"], 6);
  EXPECT_EQ(j["value"]["rank"], 12);
}

TEST(Cli, CountFiniteField) {
  auto r = cli("count --degree 3 --merge 1,4 --field fq:7 --assign sq,ns");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"]["rank"], 12);
}

TEST(Cli, WallcrossPasses) {
  auto r = cli("wallcross --degree 3 --merge-from 1 --merge-to 2");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pass"], true);
}

TEST(Cli, Pfister) {
  auto r = cli("pfister --vars 3");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "aniso");
  EXPECT_EQ(j["form"].size(), 16u);
}

TEST(Cli, VerifySpringer) {
  auto r = cli("verify --suite springer");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], 18);
  EXPECT_EQ(j["pass"], true);
}

TEST(Cli, VerifyIsDeterministic) {
  auto a = cli("verify --suite identities --jobs 4");
  auto b = cli("verify --suite identities --jobs 1");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = cli("verify --suite residual --jobs 3");
  auto d = cli("verify --suite residual --jobs 3");
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("verify --suite nonsense").code, 2);
  EXPECT_EQ(cli("count").code, 2);
  EXPECT_EQ(cli("count --degree 3 --merge 1,2").code, 2);
  EXPECT_EQ(cli("count --degree 3 --merge 1 --field fq:9x").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
}

TEST(Cli, BudgetExceededIsFailure) {
  auto r = cli("--budget 3 count --degree 4 --pairs 0");
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "gwfloor_cli_out.json";
  auto r = cli("--out " + path.string() + " pfister --vars 1");
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["verdict"], "aniso");
  std::filesystem::remove(path);
}

TEST(Cli, FaultInjectionIsCaught) {
  auto r = run(GWFLOOR_FAULTY_CLI_PATH, "verify --suite all --jobs 4");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("first failing check: identities/type_a_product"), std::string::npos) << r.err;
}
