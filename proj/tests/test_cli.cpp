#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aiii/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "aiii");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = aiii::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("aiii_test_" + name)).string();
}

}  // namespace

TEST(Cli, ReportJson) {
  const auto r = run({"report", "5x3x4:2-3,4-1:5:2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = aiii::Json::parse(r.out);
  EXPECT_EQ(j["lambda"], aiii::Json::parse("[2,1,1,1]"));
  EXPECT_EQ(j["mu"], aiii::Json::parse("[2,1]"));
  EXPECT_EQ(j["Lambda"], aiii::Json::parse(R"(["-+","-+","+","+","+","-"])"));
  EXPECT_EQ(j["dimension"], 25);
  EXPECT_EQ(j["wkPlus"], aiii::Json::parse("[5,4,2,3,1]"));
  EXPECT_EQ(j["graph"]["edges"], aiii::Json::parse("[[2,3],[4,1]]"));
}

TEST(Cli, ReportText) {
  const auto r = run({"report", "--text", "1x1x1:1-1::"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dimension: 1"), std::string::npos);
}

TEST(Cli, Count) {
  const auto r = run({"count", "3", "2", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "formula=34 enumerated=34 OK\n");
}

TEST(Cli, Enumerate) {
  const auto r = run({"enumerate", "2", "2", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2x2x0::: dim=2 a+=0 a-=0 b=0 c=0\n");
  const auto j = run({"enumerate", "--json", "1", "1", "1"});
  EXPECT_EQ(aiii::Json::parse(j.out).size(), 3U);
}

TEST(Cli, HasseDotAndJson) {
  const auto dot = run({"hasse", "1", "1", "1", "--dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph hasse {", 0), 0U);
  const auto js = aiii::Json::parse(run({"hasse", "2", "2", "2"}).out);
  EXPECT_EQ(js["nodes"].size(), 16U);
  const std::string path = temp_path("hasse.dot");
  EXPECT_EQ(run({"hasse", "1", "1", "1", "--dot", "-o", path}).code, 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), dot.out);
  std::remove(path.c_str());
}

TEST(Cli, Fiber) {
  const auto r = run({"fiber", "2", "2", "2", "--lambda", "1,1", "--mu", "1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("size=6 formula=6"), std::string::npos);
  EXPECT_EQ(run({"fiber", "2", "2", "2", "--lambda", "3", "--mu", "1,1"}).code, 3);
  EXPECT_EQ(run({"fiber", "2", "2", "2", "--lambda", "x", "--mu", "1,1"}).code, 3);
}

TEST(Cli, Classify) {
  const std::string path = temp_path("matrix.txt");
  {
    std::ofstream f(path);
    f << "2 2 2\n1/2 0\n0 0\n0 1\n0 0\n";
  }
  const auto r = run({"classify", "--matrix", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2x2x2::1:1\n");
  {
    std::ofstream f(path);
    f << "2 2 2\n1 2\n2 4\n0 0\n0 0\n";
  }
  EXPECT_EQ(run({"classify", "--matrix", path}).code, 3);
  {
    std::ofstream f(path);
    f << "2 2 2\n1 2\n";
  }
  EXPECT_EQ(run({"classify", "--matrix", path}).code, 3);
  std::remove(path.c_str());
  EXPECT_EQ(run({"classify", "--matrix", path}).code, 3);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "2", "1", "2", "--seed", "5", "--trials", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("oracle-phi-s: OK"), std::string::npos);
  EXPECT_NE(r.out.find("hasse: OK"), std::string::npos);
}

TEST(Cli, VerifyReadsEnvironmentDefaults) {
  ::setenv("AIII_TRIALS", "not-a-number", 1);
  EXPECT_EQ(run({"verify", "1", "1", "1"}).code, 3);
  EXPECT_EQ(run({"verify", "1", "1", "1", "--trials", "1"}).code, 0);
  ::unsetenv("AIII_TRIALS");
}

TEST(Cli, UsageAndValidationErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"count", "1"}).code, 2);
  EXPECT_EQ(run({"count", "-1", "1", "1"}).code, 2);
  EXPECT_EQ(run({"report", "5x3x3:2-3,4-1:5:2"}).code, 3);
  EXPECT_EQ(run({"count", "9", "1", "1"}).code, 3);
  EXPECT_EQ(run({"count", "1", "1", "3"}).code, 3);
  EXPECT_EQ(run({"--size-bound", "9", "count", "7", "1", "1"}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}
