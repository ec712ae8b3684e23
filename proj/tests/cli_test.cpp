#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ORETOOL_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("oretool_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

TEST(Cli, CheckHamiltonCondition) {
  const auto k4 = write_temp("k4.g6", "C~\n");
  const auto r = run("check --theorem 1 " + k4);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("satisfied"), std::string::npos);

  const auto c5 = write_temp("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  const auto v = run("check --theorem 1 --format json " + c5);
  EXPECT_EQ(v.status, 1);
  const auto j = nlohmann::json::parse(v.out);
  EXPECT_FALSE(j["satisfied"].get<bool>());
  EXPECT_EQ(j["threshold"], 5);
  EXPECT_EQ(j["violations"].size(), 5U);
}

TEST(Cli, KIsValidatedPerCondition) {
  const auto k4 = write_temp("k4b.g6", "C~\n");
  EXPECT_EQ(run("check --theorem 2 " + k4).status, 2);
  EXPECT_EQ(run("check --theorem 1 --k 3 " + k4).status, 2);
  EXPECT_EQ(run("check --theorem 2 --k 2 " + k4).status, 0);
  EXPECT_EQ(run("tree --k 1 " + k4).status, 2);
}

TEST(Cli, HamiltonAndTree) {
  const auto pet = write_temp("petersen.g6", "IheA@GUAo\n");
  const auto h = run("hamilton --format json " + pet);
  EXPECT_EQ(h.status, 1);
  const auto j = nlohmann::json::parse(h.out);
  EXPECT_EQ(j["result"], "witness");
  EXPECT_EQ(j["witness"]["degree_sum"], 6);

  const auto k4 = write_temp("k4c.g6", "C~\n");
  const auto c = run("hamilton " + k4);
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(c.out.rfind("cycle:", 0), 0U);

  const auto t = run("tree --k 2 --format json " + pet);
  EXPECT_EQ(t.status, 0);
  EXPECT_EQ(nlohmann::json::parse(t.out)["leaf_count"], 2);
}

TEST(Cli, Oracle) {
  const auto star = write_temp("star.txt", "4 3\n0 1\n0 2\n0 3\n");
  EXPECT_EQ(run("oracle hamilton " + star).status, 1);
  const auto m = run("oracle minleaf --format json " + star);
  EXPECT_EQ(m.status, 0);
  EXPECT_EQ(nlohmann::json::parse(m.out)["min_leaf_count"], 3);
  const auto lp = run("oracle longestpath --format json " + star);
  EXPECT_EQ(nlohmann::json::parse(lp.out)["order"], 3);
}

TEST(Cli, Survey) {
  const auto r = run("survey --n 4 --k 2,3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 65);
  EXPECT_EQ(run("survey --n 7").status, 2);
}

TEST(Cli, BadInput) {
  const auto bad = write_temp("bad.g6", "Bx\n");
  EXPECT_EQ(run("hamilton --g6 " + bad).status, 2);
  EXPECT_EQ(run("hamilton /nonexistent/graph").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

}  // namespace
