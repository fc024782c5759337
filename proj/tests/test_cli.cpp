#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct ToolResult {
  int exit_code;
  std::string out;
};

// Runs the tool with stderr discarded and returns (exit code, stdout).
ToolResult run(const std::string& args) {
  const std::string cmd = std::string(HECKECERT_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("heckecert_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(Cli, CertifyAllUpToFour) {
  const std::string path = temp_path("all.json");
  const ToolResult r = run("certify --all --n-max 4 --out " + path);
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(slurp(path));
  ASSERT_TRUE(j.is_array());
  EXPECT_GE(j.size(), 30u);
  for (const auto& c : j) {
    EXPECT_EQ(c["status"], "proved") << c["relation_id"];
    EXPECT_EQ(c["residual_terms"], 0);
    EXPECT_EQ(c["q_oracle_samples"].size(), 5u);
  }
}

TEST(Cli, TrivialAndOutOfRange) {
  const ToolResult ok = run("certify --relation ppp1 --n 1");
  EXPECT_EQ(ok.exit_code, 0);
  const auto j = nlohmann::json::parse(ok.out);
  EXPECT_EQ(j[0]["status"], "proved");
  EXPECT_EQ(run("certify --relation tpt1 --n 1").exit_code, 1);
  EXPECT_EQ(run("certify --relation no_such --n 2").exit_code, 1);
  EXPECT_EQ(run("certify --n 2").exit_code, 1);
  EXPECT_EQ(run("certify --relation delPP --n 6").exit_code, 1);  // needs --deep
  EXPECT_EQ(run("").exit_code, 1);
}

TEST(Cli, CorruptedRelationFails) {
  EXPECT_EQ(run("certify --relation pttp1 --n 2 --corrupt").exit_code, 2);
  EXPECT_EQ(run("oracle --relation pttp1 --n 2 --corrupt").exit_code, 2);
  EXPECT_EQ(run("oracle --relation pttp1,delPP --n-max 3").exit_code, 0);
}

TEST(Cli, OracleIsReproducible) {
  const ToolResult a = run("oracle --relation ppp1 --n 3 --seed 17");
  const ToolResult b = run("oracle --relation ppp1 --n 3 --seed 17");
  const ToolResult c = run("oracle --relation ppp1 --n 3 --seed 18");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, ScanGamma) {
  const ToolResult r = run("scan-gamma --n 3 --steps 10000");
  EXPECT_EQ(r.exit_code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "gamma,qint_Np2_plus_2N,in_prop3_window,in_prop4_window,sign");
  int rows = 0;
  int changes = 0;
  int last = 0;
  std::string first;
  std::string final_row;
  while (std::getline(in, line)) {
    if (rows == 0) first = line;
    final_row = line;
    ++rows;
    const int sign = std::stoi(line.substr(line.rfind(',') + 1));
    if (last != 0 && sign != 0 && sign != last) ++changes;
    if (sign != 0) last = sign;
  }
  EXPECT_EQ(rows, 10000);
  EXPECT_EQ(changes, 1);
  EXPECT_NEAR(std::stod(first.substr(first.find(',') + 1)), 1.0, 1e-10);
  EXPECT_NEAR(std::stod(final_row.substr(final_row.find(',') + 1)), -1.0, 1e-10);  // -[2] at pi/3
  EXPECT_EQ(run("scan-gamma --n 1").exit_code, 1);
  EXPECT_EQ(run("scan-gamma --n 3 --steps 1").exit_code, 1);
}

TEST(Cli, SpectrumAndSeeds) {
  EXPECT_EQ(run("spectrum --n 3 --local-dim 2 --q 2").exit_code, 0);
  EXPECT_EQ(run("spectrum --n 3 --q 1").exit_code, 1);
  const std::string path = temp_path("seeds.json");
  EXPECT_EQ(run("seeds --gamma 0.7853981633974483 --local-dim 2 --steps 10 --out " + path).exit_code, 0);
  const auto j = nlohmann::json::parse(slurp(path));
  ASSERT_GE(j.size(), 1u);
  EXPECT_EQ(j[0]["provenance"], "trivial");
  for (const char* key : {"n", "gamma", "T_re", "T_im", "provenance"}) EXPECT_TRUE(j[0].contains(key));
  EXPECT_EQ(run("seeds --in " + path).exit_code, 0);
  EXPECT_EQ(run("seeds --gamma 2.0").exit_code, 1);
  EXPECT_EQ(run("seeds").exit_code, 1);
}

}  // namespace
