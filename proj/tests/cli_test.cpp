#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(QALT_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data_file(const std::string& name) { return std::string(QALT_DATA_DIR) + "/" + name; }

const std::string kTrefoil = "'X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)'";

}  // namespace

TEST(Cli, Q) {
  const CliRun r = run("q --pd " + kTrefoil);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("deg Q = 2"), std::string::npos) << r.out;
}

TEST(Cli, JonesAndDet) {
  EXPECT_EQ(run("jones --pd " + kTrefoil).code, 0);
  const CliRun d = run("det --pd " + kTrefoil);
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find('3'), std::string::npos);
}

TEST(Cli, CheckVerdicts) {
  const CliRun n = run("check --json --pd '[[2,14,3,13],[5,11,6,10],[7,15,8,14],[9,5,10,4],[11,7,12,6],[12,2,13,1],[15,9,16,8],[16,4,1,3]]'");
  EXPECT_EQ(n.code, 0);
  EXPECT_NE(n.out.find("NotQuasiAlternating"), std::string::npos) << n.out;
  const CliRun i = run("check --pd " + kTrefoil);
  EXPECT_EQ(i.code, 0);
  EXPECT_NE(i.out.find("Inconclusive"), std::string::npos) << i.out;
}

TEST(Cli, PdFromFile) {
  const auto p = std::filesystem::temp_directory_path() / "qalt_cli_trefoil.pd";
  std::ofstream(p) << "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)\n";
  EXPECT_EQ(run("det --pd " + p.string()).code, 0);
  std::filesystem::remove(p);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run("q --pd 'X(1,2,3)'").code, 2);
  EXPECT_EQ(run("q").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("table --catalog /nonexistent/catalog.csv").code, 2);
  EXPECT_EQ(run("braid3 --family 3 --n 0 --m -7").code, 2);
  EXPECT_EQ(run("montesinos --e 1 --tangles 4/2,2/1 --final 5/2").code, 2);
  EXPECT_EQ(run("pretzel --family A --r 3").code, 2);
}

TEST(Cli, ResourceBound) {
  EXPECT_EQ(run("--max-crossings 2 q --pd " + kTrefoil).code, 3);
  EXPECT_EQ(run("q --max-crossings 2 --pd " + kTrefoil).code, 3);
}

TEST(Cli, TableFixtures) {
  const CliRun r = run("table --catalog " + data_file("fixtures.csv"));
  EXPECT_EQ(r.code, 0) << r.out;
  const CliRun j = run("table --json --catalog " + data_file("fixtures.csv"));
  EXPECT_EQ(j.code, 0);
  const auto first = j.out.find_first_not_of(" \n");
  ASSERT_NE(first, std::string::npos);
  EXPECT_TRUE(j.out[first] == '{' || j.out[first] == '[');
}

TEST(Cli, TableMismatch) {
  const auto p = std::filesystem::temp_directory_path() / "qalt_cli_bad.csv";
  std::ofstream(p) << "name,pd,expected_det,expected_deg_q\nt,\"X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)\",4,2\n";
  EXPECT_EQ(run("table --catalog " + p.string()).code, 1);
  std::filesystem::remove(p);
}

TEST(Cli, Kanenobu) {
  EXPECT_EQ(run("kanenobu -p 3 -q 0").code, 0);
  const CliRun s = run("kanenobu --scan");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.rfind("[[", 0), 0u) << s.out.substr(0, 40);
}

TEST(Cli, Braid3) {
  EXPECT_EQ(run("braid3 --family 1 --n 1 --pairs 1,1").code, 0);
  EXPECT_EQ(run("braid3 --family 2 --n 1 --m -2").code, 0);
  EXPECT_EQ(run("braid3 --family 3 --n 2 --m -3").code, 0);
}

TEST(Cli, MontesinosAndPretzel) {
  const CliRun m = run("montesinos --e 1 --tangles 2/1,2/1 --final 5/2");
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find('8'), std::string::npos);
  const CliRun p = run("pretzel --family A --r 5");
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("23"), std::string::npos);
  EXPECT_EQ(run("pretzel --family C --n 3 --pipeline").code, 0);
}
