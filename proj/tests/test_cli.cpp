#include "gwf/cli.hpp"
#include "gwf/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace gwf {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "gwf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() / ("gwf_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }
  fs::path root_;
};

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"catalog", "show"}).code, kExitUsage);
  EXPECT_EQ(run({"catalog", "show", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "box", "--n-dirs", "7"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "box", "--dump-samples"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "box", "--dim", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "box", "--param", "a=nan_value"}).code, kExitUsage);
  EXPECT_EQ(run({"propagate", "dirac"}).code, kExitUsage);
  EXPECT_EQ(run({"singular-space", "/nonexistent/q.json"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, CatalogList) {
  const CliRun r = run({"catalog", "list"});
  EXPECT_EQ(r.code, kExitOk);
  for (const char* name : {"dirac", "gaussian", "box", "chirp", "line_delta_2d", "bump"}) {
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
  }
  const CliRun j = run({"catalog", "list", "--json"});
  const Json doc = Json::parse(j.out);
  ASSERT_TRUE(doc.is_array());
  EXPECT_GE(doc.size(), 9u);
  EXPECT_EQ(doc[0]["name"], "dirac");
}

TEST(Cli, CatalogShow) {
  const CliRun r = run({"catalog", "show", "box", "--param", "a=2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["name"], "box");
  EXPECT_EQ(doc["params"]["a"], 2.0);
  EXPECT_EQ(doc["ground_truth"]["sigma_dirs"].size(), 2u);
}

TEST(Cli, AnalyzeDiracPasses) {
  const CliRun r = run({"analyze", "dirac"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("theorem check: pass"), std::string::npos) << r.out;
}

TEST(Cli, AnalyzeChirpWarns) {
  const CliRun r = run({"analyze", "chirp"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("not compactly supported"), std::string::npos) << r.err;
}

TEST(Cli, AnalyzeClassicalAtBoxEdge) {
  const CliRun r = run({"analyze", "box", "--x0", "1"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("classical: 2 singular"), std::string::npos) << r.out;
}

TEST_F(TempDir, AnalyzeWritesFiles) {
  const CliRun r = run({"analyze", "box", "--out", root_.string(), "--dump-samples"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* f : {"analyze.json", "profiles_gabor.csv", "profiles_sigma.csv", "samples.gwf1"}) {
    EXPECT_TRUE(fs::exists(root_ / f)) << f;
  }
  const Json doc = Json::parse(slurp(root_ / "analyze.json"));
  EXPECT_EQ(doc["entry"]["name"], "box");
  EXPECT_EQ(slurp(root_ / "profiles_gabor.csv").substr(0, 18), "dir_index,r,abs_V\n");
  std::ifstream is(root_ / "samples.gwf1", std::ios::binary);
  EXPECT_EQ(read_gwf1(is).grid.n, 1024u);
}

TEST_F(TempDir, PropagateIsDeterministic) {
  const fs::path a = root_ / "a", b = root_ / "b";
  ASSERT_EQ(run({"propagate", "gaussian", "--t", "0.7", "--out", a.string(), "--dump-samples"}).code, kExitOk);
  ASSERT_EQ(run({"propagate", "gaussian", "--t", "0.7", "--out", b.string(), "--dump-samples"}).code, kExitOk);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    ++files;
    EXPECT_EQ(slurp(entry.path()), slurp(b / entry.path().filename())) << entry.path().filename();
  }
  EXPECT_EQ(files, 4u);
}

TEST_F(TempDir, SingularSpace) {
  const fs::path q = root_ / "q.json";
  std::ofstream(q) << R"({"dim": 1, "re": [[0, 0], [0, 0]], "im": [[1, 0], [0, 1]]})";
  const CliRun r = run({"singular-space", q.string(), "--out", root_.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("dimension 2"), std::string::npos);
  const Json doc = Json::parse(slurp(root_ / "singular_space.json"));
  EXPECT_EQ(doc["dimension"], 2);
  EXPECT_TRUE(doc["poisson_bracket_vanishes"].get<bool>());
  EXPECT_EQ(doc["ker_re_f_distance"], 0.0);

  const fs::path bad = root_ / "bad.json";
  std::ofstream(bad) << R"({"dim": 1, "re": [[1, 2], [0, 1]]})";
  EXPECT_EQ(run({"singular-space", bad.string()}).code, kExitUsage);
  const fs::path garbage = root_ / "garbage.json";
  std::ofstream(garbage) << "{not json";
  EXPECT_EQ(run({"singular-space", garbage.string()}).code, kExitUsage);
}

}  // namespace
}  // namespace gwf
