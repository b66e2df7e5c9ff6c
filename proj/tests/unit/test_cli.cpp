#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"

namespace radix::cli {
namespace {

std::string fixture(const std::string& name) { return std::string(RADIX_FIXTURE_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cfg(CliConfig cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

Result run_cmd(const std::string& command, std::vector<std::string> inputs) {
  CliConfig cfg;
  cfg.command = command;
  cfg.inputs = std::move(inputs);
  return run_cfg(cfg);
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("radix_cli_test_" + name);
  std::ofstream(path) << text;
  return path;
}

// Runs the installed binary; returns its exit status.
int shell(const std::string& args) {
  const int status = std::system((std::string(RADIX_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Verify, ExitCodes) {
  EXPECT_EQ(run_cmd("verify", {fixture("degree2.poly")}).code, kOk);
  EXPECT_EQ(run_cmd("verify", {fixture("degree3.poly")}).code, kOk);
  EXPECT_EQ(run_cmd("verify", {fixture("degree2.scheme")}).code, kOk);
  EXPECT_EQ(run_cmd("verify", {fixture("degree2_witnessed.tower")}).code, kOk);
  const auto broken = run_cmd("verify", {fixture("degree2_broken.poly")});
  EXPECT_EQ(broken.code, kFailed);
  EXPECT_NE(broken.out.find("FAIL identity 2"), std::string::npos) << broken.out;
  const auto bad = run_cmd("verify", {fixture("malformed.poly")});
  EXPECT_EQ(bad.code, kBadInput);
  EXPECT_NE(bad.err.find(":3:19:"), std::string::npos) << bad.err;
  EXPECT_EQ(run_cmd("verify", {"/nonexistent/file.poly"}).code, kBadInput);
}

TEST(Verify, UnwitnessedTowerFails) {
  const auto r = run_cmd("verify", {fixture("degree2.tower")});
  EXPECT_EQ(r.code, kFailed);
  EXPECT_NE(r.out.find("no witness"), std::string::npos) << r.out;
}

TEST(Verify, RelabelSamplesAreSeeded) {
  CliConfig cfg;
  cfg.command = "verify";
  cfg.inputs = {fixture("degree3.poly")};
  cfg.samples = 4;
  cfg.seed = 11;
  const auto a = run_cfg(cfg);
  const auto b = run_cfg(cfg);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("relabel"), std::string::npos);
}

TEST(Obstruct, RefusesSmallDegree) {
  const auto r = run_cmd("obstruct", {fixture("degree3.poly")});
  EXPECT_EQ(r.code, kRefused);
  EXPECT_NE(r.err.find("n >= 5"), std::string::npos) << r.err;
}

TEST(Obstruct, FixtureReportsContradiction) {
  const auto r = run_cmd("obstruct", {fixture("ruffini/02_disc_root.poly")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("outcome CONTRADICTION"), std::string::npos) << r.out;
  // A failed identity is also a completed diagnosis.
  const auto f = run_cmd("obstruct", {fixture("ruffini/03_disc_perturbed.poly")});
  EXPECT_EQ(f.code, kOk);
  EXPECT_NE(f.out.find("outcome FAILED-IDENTITY at level 1"), std::string::npos) << f.out;
}

TEST(Builtin, OutputVerifies) {
  for (const std::string name : {"degree2", "degree3"}) {
    const auto r = run_cmd("builtin", {name});
    ASSERT_EQ(r.code, kOk);
    const auto path = temp_file(name + ".poly", r.out);
    EXPECT_EQ(run_cmd("verify", {path.string()}).code, kOk) << r.out;
  }
  EXPECT_EQ(run_cmd("builtin", {"degree5"}).code, kBadInput);
}

TEST(Abelize, ResultVerifies) {
  for (const std::string name : {"degree2.tower", "degree2_witnessed.tower"}) {
    const auto r = run_cmd("abelize", {fixture(name)});
    ASSERT_EQ(r.code, kOk) << r.err;
    // Step lines are comments, so the whole report parses as the rewritten document.
    const auto path = temp_file("abel_" + name, r.out);
    EXPECT_EQ(run_cmd("verify", {path.string()}).code, kOk) << r.out;
  }
}

TEST(Symmetrize, PowerSum) {
  const auto r = run_cmd("symmetrize", {"x1^2+x2^2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "s1^2 - 2*s2\n");
  const auto n = run_cmd("symmetrize", {"x1^2 + x2"});
  EXPECT_EQ(n.code, kBadInput);
  EXPECT_NE(n.err.find("not symmetric"), std::string::npos) << n.err;
  EXPECT_EQ(run_cmd("symmetrize", {"x1 +"}).code, kBadInput);
}

TEST(Character, Examples) {
  CliConfig cfg;
  cfg.command = "character";
  cfg.inputs = {"x1 + w(3)*x2 + w(3)^2*x3"};
  cfg.q = 3;
  const auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("(1 2 3) -> w(3)^1"), std::string::npos) << r.out;

  cfg.inputs = {"(x1-x2)*(x1-x3)*(x1-x4)*(x1-x5)*(x2-x3)*(x2-x4)*(x2-x5)*(x3-x4)*(x3-x5)*(x4-x5)"};
  cfg.q = 2;
  cfg.perms = {"(1 2 3)", "(1 2)(3 4)"};
  const auto v = run_cfg(cfg);
  EXPECT_EQ(v.code, kOk);
  EXPECT_NE(v.out.find("(1 2)(3 4) -> w(2)^0"), std::string::npos) << v.out;

  cfg.perms = {"(1 2)"};
  EXPECT_EQ(run_cfg(cfg).code, kBadInput);
  cfg.perms.clear();
  cfg.q = 4;
  EXPECT_EQ(run_cfg(cfg).code, kBadInput);
}

TEST(Output, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "radix_cli_test_out.txt";
  std::filesystem::remove(path);
  CliConfig cfg;
  cfg.command = "builtin";
  cfg.inputs = {"degree2"};
  cfg.output = path.string();
  const auto r = run_cfg(cfg);
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str().rfind("polyformula n=2 s=1", 0), 0u) << ss.str();
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(shell("verify " + fixture("degree2.poly")), kOk);
  EXPECT_EQ(shell("verify " + fixture("degree2_broken.poly")), kFailed);
  EXPECT_EQ(shell("verify " + fixture("malformed.poly")), kBadInput);
  EXPECT_EQ(shell("obstruct " + fixture("degree2.poly")), kRefused);
  EXPECT_EQ(shell("verify --samples 2 --seed 3 " + fixture("degree3.poly")), kOk);
  EXPECT_EQ(shell("character -q 3 x1"), kBadInput);
  EXPECT_EQ(shell("no-such-command"), kBadInput);
  EXPECT_EQ(shell("--help"), kOk);
}

}  // namespace
}  // namespace radix::cli
