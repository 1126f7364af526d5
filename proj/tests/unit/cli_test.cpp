#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

const std::string kCli = QUIVERHH_CLI;
const std::string kCorpus = QUIVERHH_CORPUS_DIR;

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult r{-1, {}};
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "quiverhh_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST(Cli, CheckPassesOnJacobsonWitt) {
  CliResult r = run("check " + kCorpus + "/jw_p3_x.bqv " + kCorpus + "/jw_p3_x1.bqv");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("pi1_ab\tZ/3"), std::string::npos);
  EXPECT_NE(r.out.find("mt_rank_exact\tyes"), std::string::npos);
}

TEST(Cli, RecordsOutput) {
  CliResult r = run("check --records " + kCorpus + "/l2_q.bqv");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\"pi1_ab\":\"Z^2\""), std::string::npos) << r.out;
}

TEST(Cli, Hh1OnStructureConstants) {
  CliResult r = run("hh1 --bracket --ppower " + kCorpus + "/group_z3.alg");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("hh1_dim\t3"), std::string::npos) << r.out;
}

TEST(Cli, ThetaAndTorus) {
  EXPECT_EQ(run("theta --character 0=1 " + kCorpus + "/jw_p5_x.bqv").code, 0);
  EXPECT_EQ(run("torus " + kCorpus + "/kronecker.bqv").code, 0);
  EXPECT_EQ(run("betti " + kCorpus + "/beilinson_2.bqv").code, 0);
  EXPECT_EQ(run("pi1 --complex " + kCorpus + "/kronecker_a3.bqv").code, 0);
}

TEST(Cli, InputErrorsExitOne) {
  EXPECT_EQ(run("check /nonexistent/x.bqv").code, 1);
  auto bad = scratch("syntax.bqv");
  write(bad, "field Q\nquiver { v\n  a: v -> }\n");
  CliResult r = run("pi1 " + bad.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("line 3"), std::string::npos) << r.out;
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("--field 'GF(4)' pi1 " + kCorpus + "/l2_q.bqv").code, 1);
  // not a character of Z/3 over Q
  auto q3 = scratch("q3.bqv");
  write(q3, "field Q\nquiver { v; u: v -> v }\nrelations { u^3 - 1 }\n");
  EXPECT_EQ(run("theta --character 0=1 " + q3.string()).code, 1);
}

TEST(Cli, BoundsExitTwo) {
  EXPECT_EQ(run("--support-cap 1 pi1 " + kCorpus + "/kronecker_a2.bqv").code, 2);
  auto loop = scratch("free_loop.bqv");
  write(loop, "field Q\nquiver { v; u: v -> v }\nrelations { }\n");
  CliResult r = run("hh1 " + loop.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("not finite dimensional"), std::string::npos) << r.out;
}

TEST(Cli, CorpusRunsAndFailuresExitThree) {
  CliResult ok = run("corpus --dir " + kCorpus);
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("summary\t30 passed, 0 failed"), std::string::npos) << ok.out;

  auto dir = scratch("corpus");
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(kCorpus + "/jw_p2_x.bqv", dir / "jw_p2_x.bqv",
                             std::filesystem::copy_options::overwrite_existing);
  write(dir / "manifest.json",
        R"({"cases":[{"id":"wrong","files":["jw_p2_x.bqv"],"origin":"derived","expect":{"hh1_dim":7}}]})");
  CliResult bad = run("corpus --dir " + dir.string());
  EXPECT_EQ(bad.code, 3) << bad.out;
  EXPECT_NE(bad.out.find("mismatch\twrong\thh1_dim"), std::string::npos) << bad.out;
}
