#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "fixtures.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

// Runs the CLI with stderr discarded; returns exit code and stdout.
CliRun cli(const std::string& args) {
  std::string cmd = std::string("env -u DECEQ_MODEL ") + DECEQ_CLI + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string model(const char* name) { return fixtures::data(std::string("models/") + name + ".model"); }
std::string imp(const char* name) { return fixtures::data(std::string("imp/") + name + ".imp"); }

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, LawsOnTwoLocationModel) {
  CliRun r = cli("laws --model " + model("states_xy"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("LAW 1 STRONG ok\n"), std::string::npos);
  EXPECT_NE(r.out.find("LAW 4 WEAK ok STRONG counterexample: x=0,y=0,v=1\n"), std::string::npos);
  EXPECT_NE(r.out.find("LAW 7 STRONG ok\n"), std::string::npos);
}

TEST(Cli, LawsVerbatimLine) {
  CliRun r = cli("laws --model " + model("states_x"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "LAW 1 STRONG ok\nLAW 2 STRONG ok\nLAW 3 STRONG ok\nLAW 4 WEAK ok STRONG counterexample: x=0,v=1\n");
}

TEST(Cli, ImpEquiv) {
  CliRun r = cli("imp-equiv " + imp("write_read") + " " + imp("write_const") + " --model " + model("imp"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "StrongEq\n");
  r = cli("imp-equiv " + imp("spin") + " " + imp("skip") + " --model " + model("imp") + " --fuel 3");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "FuelExhausted x=0,y=0,v=0\n");
  std::string a = temp_file("a.imp", "if x = 1 then { throw e(0) } else { skip }");
  r = cli("imp-equiv " + a + " " + imp("skip") + " --model " + model("imp"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "NotEq x=1,y=0,v=0\n");
}

TEST(Cli, ModelFromEnvironment) {
  std::string cmd = std::string("DECEQ_MODEL=") + model("states_x") + " " + DECEQ_CLI + " laws > /dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
}

TEST(Cli, Prove) {
  std::string st = fixtures::data("theories/states_xy.theory");
  CliRun r = cli("prove " + fixtures::data("proofs/law6.proof") + " --theory " + st);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("ACCEPTED ", 0), 0u) << r.out;
  r = cli("prove " + fixtures::data("proofs/colaw6.proof") + " --theory " +
          fixtures::data("theories/exceptions_e12.theory"));
  EXPECT_EQ(r.code, 0);
  r = cli("prove " + fixtures::data("proofs/bad_weak_repl.proof") + " --theory " + st);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("REJECTED step 2: SideConditionViolated", 0), 0u) << r.out;
}

TEST(Cli, DualizeRoundTrip) {
  std::string st = fixtures::data("theories/states_xy.theory");
  CliRun d = cli("dualize --theory " + st);
  ASSERT_EQ(d.code, 0);
  std::string dual = temp_file("dual.theory", d.out);
  CliRun back = cli("dualize --theory " + dual);
  EXPECT_EQ(back.code, 0);
  EXPECT_EQ(back.out, deceq::read_file(st));
}

TEST(Cli, Check) {
  std::string good = temp_file("good.term", "comp(op(update_x), op(lookup_y))\n");
  CliRun r = cli("check " + good + " --model " + model("states_xy"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "type unit -> unit\ndecoration (2,0)\n");
  std::string bad = temp_file("bad.term", "comp(op(lookup_x), op(lookup_y))\n");
  r = cli("check " + bad + " --model " + model("states_xy"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("ILL-TYPED SourceTargetMismatch", 0), 0u) << r.out;
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("laws").code, 2);
  EXPECT_EQ(cli("laws --model /nonexistent.model").code, 2);
  EXPECT_EQ(cli("imp-equiv " + imp("skip") + " --model " + model("imp")).code, 2);
  EXPECT_EQ(cli("imp-equiv " + imp("skip") + " " + imp("skip") + " --model " + model("imp") + " --fuel 0").code, 2);
  std::string broken = temp_file("broken.imp", "x := ");
  EXPECT_EQ(cli("imp-equiv " + broken + " " + imp("skip") + " --model " + model("imp")).code, 2);
}
