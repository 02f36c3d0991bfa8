#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "cblagrange/io.hpp"

namespace fs = std::filesystem;
using cblagrange::io::json;

namespace {

fs::path tmp(const std::string& name) {
  fs::create_directories(CBL_TEST_TMP);
  return fs::path(CBL_TEST_TMP) / name;
}

int run(const std::string& args) {
  const std::string cmd = std::string("\"") + CBL_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, NodesExample) {
  put(tmp("c1.json"), R"({"n":1,"a":[2],"b":[0]})");
  ASSERT_EQ(run("nodes --coeffs " + tmp("c1.json").string() + " --out " + tmp("n1.json").string()), 0);
  const auto nodes = json::parse(slurp(tmp("n1.json")))["nodes"];
  ASSERT_EQ(nodes.size(), 2u);
  EXPECT_NEAR(nodes[0].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(nodes[1].get<double>(), -0.5, 1e-15);
}

TEST(Cli, PaduaVerifyPasses) {
  const auto grid = tmp("padua6.json");
  ASSERT_EQ(run("grid --preset padua --n 6 --out " + grid.string()), 0);
  const auto report = tmp("padua6_report.json");
  ASSERT_EQ(run("verify --grid " + grid.string() + " --out " + report.string()), 0);
  const auto j = json::parse(slurp(report));
  EXPECT_EQ(j["M"].get<int>(), 0);
  EXPECT_EQ(j["rank"].get<int>(), 28);
  EXPECT_TRUE(j["span_equal"].get<bool>());
}

TEST(Cli, DuplicatedNodeFails) {
  const auto grid = tmp("dup.json");
  ASSERT_EQ(run("grid --random --n 4 --sigma 2 --seed 7 --tau 0 --out " + grid.string()), 0);
  auto j = json::parse(slurp(grid));
  j["points"][1] = j["points"][0];
  put(grid, j.dump());
  EXPECT_EQ(run("verify --grid " + grid.string() + " --out " + tmp("dup_report.json").string()), 1);
  const auto report = json::parse(slurp(tmp("dup_report.json")));
  EXPECT_FALSE(report["passed"].get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run(""), 64);
  EXPECT_EQ(run("nodes"), 64);
  EXPECT_EQ(run("grid --preset hexagon --n 3"), 64);
  EXPECT_EQ(run("nodes --coeffs " + tmp("missing.json").string()), 1);
}

TEST(Cli, Deterministic) {
  const auto a = tmp("det_a.json");
  const auto b = tmp("det_b.json");
  ASSERT_EQ(run("grid --random --n 5 --sigma 3 --seed 42 --out " + a.string()), 0);
  ASSERT_EQ(run("grid --random --n 5 --sigma 3 --seed 42 --out " + b.string()), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  const auto ra = tmp("det_ra.json");
  const auto rb = tmp("det_rb.json");
  ASSERT_EQ(run("verify --grid " + a.string() + " --out " + ra.string()), 0);
  ASSERT_EQ(run("verify --grid " + b.string() + " --out " + rb.string()), 0);
  EXPECT_EQ(slurp(ra), slurp(rb));
}

TEST(Cli, FileRoundTrip) {
  const auto nodes = tmp("rt_nodes.json");
  put(nodes, R"({"nodes":[1.2, 0.7, 0.1, -0.35, -0.9]})");
  const auto coeffs = tmp("rt_coeffs.json");
  ASSERT_EQ(run("coeffs --nodes " + nodes.string() + " --out " + coeffs.string()), 0);
  const auto back = tmp("rt_back.json");
  ASSERT_EQ(run("nodes --coeffs " + coeffs.string() + " --out " + back.string()), 0);
  const auto want = json::parse(slurp(nodes))["nodes"];
  const auto got = json::parse(slurp(back))["nodes"];
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_NEAR(got[i].get<double>(), want[i].get<double>(), 1e-8 * 2.1);
  }
}

TEST(Cli, BasisAndInterp) {
  const auto grid = tmp("bi_grid.json");
  ASSERT_EQ(run("grid --preset chebyshev --n 3 --tau 1 --out " + grid.string()), 0);
  const auto csv = tmp("bi_basis.csv");
  ASSERT_EQ(run("basis --grid " + grid.string() + " --eval-lattice 3 --out " + csv.string()), 0);
  const auto text = slurp(csv);
  EXPECT_EQ(text.rfind("s,v,x,y,L\n", 0), 0u);

  // f = 1 at every node reproduces 1 on the nodes.
  const auto j = json::parse(slurp(grid));
  std::string samples = "r,u,value\n";
  std::string points = "x,y\n";
  for (const auto& p : j["points"]) {
    samples += std::to_string(p["r"].get<int>()) + "," + std::to_string(p["u"].get<int>()) + ",1\n";
    points += cblagrange::io::format_double(p["x"].get<double>()) + "," +
              cblagrange::io::format_double(p["y"].get<double>()) + "\n";
  }
  put(tmp("bi_samples.csv"), samples);
  put(tmp("bi_points.csv"), points);
  const auto out = tmp("bi_out.csv");
  ASSERT_EQ(run("interp --grid " + grid.string() + " --samples " + tmp("bi_samples.csv").string() +
                " --points " + tmp("bi_points.csv").string() + " --out " + out.string()),
            0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,y,p");
  int rows = 0;
  while (std::getline(in, line)) {
    const double p = std::stod(line.substr(line.rfind(',') + 1));
    EXPECT_NEAR(p, 1.0, 1e-10);
    ++rows;
  }
  EXPECT_EQ(rows, static_cast<int>(j["points"].size()));
}
