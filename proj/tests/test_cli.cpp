// Runs the sqc binary and checks outputs and the exit-code contract.

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string &args) {
  const std::string cmd = std::string(SQC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE *p = popen(cmd.c_str(), "r");
  if (!p)
    return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
protected:
  fs::path dir;

  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("sqc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string write(const std::string &name, const std::string &text) {
    const auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

} // namespace

TEST_F(Cli, AnalyzeDiag) {
  const auto f = write("d.json", R"({"n":3,"rows":[[-1,0,0],[0,1,0],[0,0,1]]})");
  const auto r = run("analyze " + f + " --format structured");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_EQ(j["payload"]["status"], "CertifiedQuasiconvex");
  EXPECT_EQ(j["payload"]["certificate"]["rule"], "TwoEigenvalueCharacterization");
  EXPECT_EQ(j["version"], "sqc-report/1");
}

TEST_F(Cli, AnalyzeNoIsStillExitZero) {
  const auto f = write("z.json", R"({"n":2,"rows":[[0,1],[1,0]]})");
  const auto r = run("analyze " + f + " --format structured");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["payload"]["status"], "CertifiedNotQuasiconvex");
  EXPECT_EQ(j["payload"]["witness"]["kind"], "PairViolation");
  EXPECT_EQ(j["payload"]["witness"]["x"], json::parse("[1.0, 0.0]"));
  EXPECT_EQ(j["payload"]["witness"]["y"], json::parse("[0.0, 1.0]"));
}

TEST_F(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("analyze " + write("one.json", R"({"n":1,"rows":[[1]]})")).code, 2);
  EXPECT_EQ(run("analyze " + write("bad.json", "{oops")).code, 2);
  EXPECT_EQ(run("analyze " + write("asym.json", R"({"n":2,"rows":[[0,1],[2,0]]})")).code, 2);
  EXPECT_EQ(run("analyze " + (dir / "missing.json").string()).code, 2);
  EXPECT_EQ(run("analyze").code, 2);
  EXPECT_EQ(run("frobnicate x").code, 2);
  EXPECT_EQ(run("generate nosuchfamily").code, 2);
  EXPECT_EQ(run("generate householder --v 1,-1,1").code, 2);
  EXPECT_EQ(run("generate ciqc --lambda 0 --mu 1 --nu 4").code, 2);
  EXPECT_EQ(run("--format xml analyze x").code, 2);
}

TEST_F(Cli, ParetoAndCopositive) {
  const auto f = write("p.json", R"({"n":2,"rows":[[0,-1],[-1,0]]})");
  auto r = run("pareto " + f + " --format structured");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j["payload"]["pairs"].size(), 1u);
  EXPECT_NEAR(j["payload"]["pairs"][0]["value"].get<double>(), -1.0, 1e-12);

  r = run("copositive " + f + " --format structured");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["payload"]["copositive"], false);

  const auto i4 = write("i4.json", R"({"n":4,"rows":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})");
  r = run("copositive " + i4 + " --format structured");
  EXPECT_EQ(json::parse(r.out)["payload"]["copositive"], true);

  r = run("pareto " + i4 + " --max-exact-dim 3");
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, MinimizeAndProbe) {
  const auto f = write("d.json", R"({"n":3,"rows":[[-1,0,0],[0,1,0],[0,0,1]]})");
  auto r = run("minimize " + f + " --format structured");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_NEAR(j["payload"]["value"].get<double>(), -1.0, 1e-12);
  EXPECT_EQ(j["payload"]["method"], "ExactPareto");
  EXPECT_NEAR(j["payload"]["argmin"][0].get<double>(), 1.0, 1e-12);

  r = run("probe " + f + " --samples 100000 --seed 7 --format structured");
  ASSERT_EQ(r.code, 0);
  j = json::parse(r.out);
  EXPECT_TRUE(j["payload"]["witness"].is_null());
  EXPECT_EQ(j["config"]["seed"], 7);
}

TEST_F(Cli, GenerateHouseholderRoundTrip) {
  auto r = run("generate householder --v 1,1,1");
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["n"], 3);
  EXPECT_NEAR(doc["rows"][0][0].get<double>(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(doc["rows"][0][1].get<double>(), -2.0 / 3.0, 1e-15);

  const auto f = write("h.json", r.out);
  for (const char *cmd : {"analyze", "pareto", "copositive", "minimize", "probe --samples 2000"})
    EXPECT_EQ(run(std::string(cmd) + " " + f).code, 0) << cmd;
  r = run("analyze " + f + " --format structured");
  EXPECT_EQ(json::parse(r.out)["payload"]["status"], "CertifiedQuasiconvex");
}

TEST_F(Cli, GenerateOutAndRandom) {
  const auto out = (dir / "g.json").string();
  EXPECT_EQ(run("generate negative-positive --n 4 --seed 3 --out " + out).code, 0);
  ASSERT_TRUE(fs::exists(out));
  const auto r = run("analyze " + out + " --format structured --samples 1000");
  EXPECT_EQ(json::parse(r.out)["payload"]["status"], "CertifiedQuasiconvex");
  for (const char *fam : {"ciqc", "engfm", "householder", "diag-two-eig", "negative-positive"})
    EXPECT_EQ(run(std::string("generate ") + fam + " --random --seed 5").code, 0) << fam;
}

TEST_F(Cli, DeterministicStructuredOutput) {
  const auto f = write("r.json", R"({"n":3,"rows":[[1,-0.5,-0.2],[-0.5,2,-0.1],[-0.2,-0.1,0.5]]})");
  const auto a = run("analyze " + f + " --format structured --seed 4 --samples 5000");
  const auto b = run("analyze " + f + " --format structured --seed 4 --samples 5000");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto t = run("analyze " + f + " --seed 4 --samples 5000");
  EXPECT_NE(t.out.find("payload.status:"), std::string::npos);
}

TEST_F(Cli, Help) { EXPECT_EQ(run("--help").code, 0); }
