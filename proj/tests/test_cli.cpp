#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = adic::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ThueMorse) {
  const Result r = run({"tm", "16", "--check-parity"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0110100110010110\nparity mismatches: 0\n");
}

TEST(Cli, StepExamples) {
  EXPECT_EQ(run({"step", "2", "morse"}).out, "111(0) = 7\n");
  EXPECT_EQ(run({"step", "5", "morse", "--inverse"}).out, "001(0) = 4\n");
  EXPECT_EQ(run({"--extend-at-max", "step", "(10)", "morse"}).out, "(0) = 0\n");
  EXPECT_EQ(run({"step", "0", "morse", "-n", "5"}).out, "011(0) = 6\n");
  EXPECT_EQ(run({"step", "1/3", "odometer"}).out, "001(10) = 4/3\n");
  EXPECT_EQ(run({"step", "-1", "odometer"}).out, "(0) = 0\n");
  EXPECT_EQ(run({"step", "(0)", "diff", "--inverse", "--x0", "1"}).out, "(1) = -1\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"step", "(01)", "morse"}).code, 3);
  EXPECT_EQ(run({"step", "1/2", "morse"}).code, 2);
  EXPECT_EQ(run({"step", "x", "morse"}).code, 2);
  EXPECT_EQ(run({"step", "3", "frobnicate"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  const Result r = run({"step", "(10)", "morse"});
  EXPECT_NE(r.err.find("MaxPoint"), std::string::npos);
}

TEST(Cli, Table) {
  const Result r = run({"table", "0", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "n\tM(n)\tr(n)\tcase\ttheta(n)\tphi(n)\n"
            "0\t1\t2\ti\t+1\t1\n"
            "1\t3\t3\ti\t+2\t0\n"
            "2\t7\t4\ti\t+5\t1\n"
            "3\t2\t2\tii\t-1\t1\n");
}

TEST(Cli, Coding) {
  EXPECT_EQ(run({"code", "(0)", "0", "7"}).out, "01101001\n");
  EXPECT_EQ(run({"--extend-at-max", "code", "(0)", "-4", "3"}).out, "1001.0110\n");
  EXPECT_EQ(run({"code", "(0)", "-4", "-1"}).code, 3);
}

TEST(Cli, Factor) {
  EXPECT_EQ(run({"factor", "0110"}).out, "true\n");
  EXPECT_EQ(run({"factor", "000"}).out, "false\n");
  EXPECT_EQ(run({"--format", "json-lines", "factor", "010"}).out,
            "{\"factor\":true,\"window\":40,\"word\":\"010\"}\n");
}

TEST(Cli, Solenoid) {
  EXPECT_EQ(run({"solenoid-step", "(0).(0)", "odometer"}).out, "(0).1(0)  y=1(0) lambda=0\n");
  EXPECT_EQ(run({"solenoid-step", "(0).(0)", "translate", "--by", "1/2"}).out, "(0)1.(0)  y=(0) lambda=1/2\n");
  EXPECT_EQ(run({"solenoid-step", "(0).(0)", "odometer", "--index", "-1", "-n", "2"}).out,
            "(0).1(0)  y=1(0) lambda=0\n");
  EXPECT_EQ(run({"solenoid-step", "(0).(0)", "translate", "--by", "1/3"}).code, 2);
}

TEST(Cli, JsonLines) {
  const Result r = run({"--format", "json-lines", "orbit", "0", "morse", "-n", "1"});
  EXPECT_EQ(r.out,
            "{\"point\":\"(0)\",\"step\":0,\"value\":\"0\"}\n"
            "{\"point\":\"1(0)\",\"step\":1,\"value\":\"1\"}\n");
}

TEST(Cli, VerifyIsReproducible) {
  const Result a = run({"--seed", "5", "verify", "arithmetic", "--samples", "20"});
  const Result b = run({"--seed", "5", "verify", "arithmetic", "--samples", "20"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.err.find("wall time"), std::string::npos);
}
