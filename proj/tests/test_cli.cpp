#include <p3x/verify/report.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;  // stdout and stderr
};

Run p3x(const std::string& args) {
  const std::string cmd = std::string(P3X_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kFixtures = P3X_FIXTURES;

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

TEST(Cli, CheckPasses) {
  const auto r = p3x("check ker-g");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "PASS  ker-g"));
}

TEST(Cli, UnknownCheckIsUsageError) {
  const auto r = p3x("check no-such-id");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r, "unknown check"));
}

TEST(Cli, MalformedQuarticFileGivesLineDiagnostic) {
  for (const std::string& spec : {"'file(" + kFixtures + "/bad.q)'", "file:" + kFixtures + "/bad.q"}) {
    const auto r = p3x("check dims-wd --quartic " + spec);
    EXPECT_EQ(r.code, 2) << r.out;
    EXPECT_TRUE(has(r, "bad.q:3:")) << r.out;
  }
}

TEST(Cli, QuarticFromFile) {
  const auto r = p3x("check dims-vxd --quartic file:" + kFixtures + "/fermat.q --n-random 0");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "dims[file(")) << r.out;
}

TEST(Cli, ForcedFailureExitsOne) {
  const auto r = p3x("check ker-g --expected " + kFixtures + "/wrong_expected.txt");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_TRUE(has(r, "FAIL  ker-g"));
  EXPECT_TRUE(has(r, "MISMATCH"));
  EXPECT_EQ(p3x("all --cost fast --expected " + kFixtures + "/wrong_expected.txt").code, 1);
}

TEST(Cli, ForcedDegeneracyExitsThree) {
  const auto r = p3x("check dims-wd --partner fermat");
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_TRUE(has(r, "DEGENERATE"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(p3x("").code, 2);
  EXPECT_EQ(p3x("frobnicate").code, 2);
  EXPECT_EQ(p3x("check").code, 2);
  EXPECT_EQ(p3x("check ker-g --bogus").code, 2);
  EXPECT_EQ(p3x("check ker-g --quartic nonsense").code, 2);
  EXPECT_EQ(p3x("check ker-g --cost cheap").code, 2);
  EXPECT_EQ(p3x("check ker-g --partner nope").code, 2);
  EXPECT_EQ(p3x("check ker-g --seed -x").code, 2);
  EXPECT_EQ(p3x("check ker-g --expected /nonexistent").code, 2);
  EXPECT_EQ(p3x("scan --d-min 3 --d-max 1").code, 2);
  EXPECT_EQ(p3x("--help").code, 0);
}

TEST(Cli, AllWritesJsonReport) {
  const std::string path = ::testing::TempDir() + "p3x_all.json";
  const auto r = p3x("all --json " + path + " --quartic fermat");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "overall: PASS"));
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto rep = p3x::verify::parse_report(ss.str());
  EXPECT_EQ(rep.overall, p3x::verify::Status::Pass);
  EXPECT_EQ(rep.results.size(), 20U);
  EXPECT_EQ(rep.config.quartic, "fermat");
}

TEST(Cli, CostFilterRunsSubset) {
  const auto r = p3x("all --cost medium");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "k1-dim"));
  EXPECT_FALSE(has(r, "ker-g"));
  EXPECT_FALSE(has(r, "v-surjective"));
}

TEST(Cli, RandomQuarticsEchoSeed) {
  const auto r = p3x("all --cost medium --quartic random --seed 42 --n-random 3 --json -");
  EXPECT_EQ(r.code, 0) << r.out;
  const auto rep = p3x::verify::parse_report(r.out);
  EXPECT_EQ(rep.config.seed, 42U);
  EXPECT_EQ(rep.config.quartics,
            (std::vector<std::string>{"random(seed=42)", "random(seed=43)", "random(seed=44)"}));
  const auto k1 = std::find_if(rep.results.begin(), rep.results.end(), [](const auto& x) { return x.id == "k1-dim"; });
  ASSERT_NE(k1, rep.results.end());
  EXPECT_EQ(k1->computed.at("dim[random(seed=43)]"), std::vector<long long>{84});
}

TEST(Cli, ScanExamples) {
  auto r = p3x("scan --d-min 4 --d-max 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "r=33 s=1  EXCLUDED_THM_MAIN"));
  r = p3x("scan --d-min 11 --d-max 11");
  EXPECT_TRUE(has(r, "r=27 s=9  EXCLUDED_RANK27"));
  EXPECT_TRUE(has(r, "r=243 s=1  EXCLUDED_THM_MAIN"));
  r = p3x("scan --d-min 0 --d-max 0");
  EXPECT_TRUE(has(r, "r=1 s=1  OPEN"));
  r = p3x("scan --d-min -4 --d-max -4 --json -");
  EXPECT_TRUE(has(r, "\"EXCLUDED_THM_MAIN\""));
}

TEST(Cli, ListShowsCatalog) {
  const auto r = p3x("list");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r, "homF-const-dim  [heavy]"));
  EXPECT_TRUE(has(r, "ker-g  [fast]"));
}

}  // namespace
