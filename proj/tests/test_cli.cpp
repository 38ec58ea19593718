// Runs the built executable and checks reports and exit codes.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "support.hpp"

using baric::testing::data_path;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string &args) {
  std::string cmd = std::string(BARIC_CLI_PATH) + " " + args + " 2>&1";
  FILE *p = popen(cmd.c_str(), "r");
  if (!p)
    return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
    out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string file(const char *name) { return data_path(name); }

bool has(const std::string &s, const std::string &needle) {
  return s.find(needle) != std::string::npos;
}

} // namespace

TEST(Cli, CheckExample) {
  auto r = run("check " + file("example.alg") + " deg6 bernstein");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_TRUE(has(r.out, "CHECK deg6: PASS — ")) << r.out;
  EXPECT_TRUE(has(r.out, "CHECK bernstein: FAIL — ")) << r.out;
  EXPECT_TRUE(has(r.out, "SUMMARY: 2 checks, 1 passed, 1 failed, 0 errors, 0 not applicable"));
  EXPECT_EQ(run("check " + file("example.alg") + " deg6").code, 0);
}

TEST(Cli, PorcelainIsTabSeparated) {
  auto r = run("--porcelain check " + file("gametic.alg"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "CHECK\tdeg6\tPASS\t")) << r.out;
  EXPECT_TRUE(has(r.out, "SUMMARY\t4\t4\t0\t0\t0\n")) << r.out;
}

TEST(Cli, DeterministicOutput) {
  for (const char *cmd : {"peirce", "train", "check", "idempotents"}) {
    auto a = run(std::string(cmd) + " " + file("example.alg"));
    auto b = run(std::string(cmd) + " " + file("example.alg"));
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_EQ(a.code, b.code) << cmd;
  }
}

TEST(Cli, Peirce) {
  auto r = run("peirce " + file("example.alg") + " --idempotent idem_a0");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "A_1/2: span{e2 + (1/2 + 1/2*l)*e3}")) << r.out;
  EXPECT_TRUE(has(r.out, "A_l: span{e3}")) << r.out;
  auto m = run("peirce " + file("example_mutated.alg"));
  EXPECT_EQ(m.code, 1) << m.out;
  EXPECT_TRUE(has(m.out, "witness")) << m.out;
  auto bad = run("peirce " + file("example.alg") + " --idempotent e2");
  EXPECT_EQ(bad.code, 2) << bad.out;
}

TEST(Cli, Train) {
  auto r = run("train " + file("euv.alg"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "CHECK train: PASS — rank 4")) << r.out;
  EXPECT_TRUE(has(r.out, "factorization: X(X-1)(X-l)(X-lbar)")) << r.out;
  EXPECT_TRUE(has(r.out, "CHECK rank4-form: PASS — form ii")) << r.out;
  auto low = run("train " + file("euv.alg") + " --max-rank 3");
  EXPECT_EQ(low.code, 1) << low.out;
}

TEST(Cli, Linearize) {
  auto r = run("linearize --expr 'x^2'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2*(x*y)\n");
  auto r2 = run("linearize --order 2 --expr 'x^2*x^2'");
  EXPECT_EQ(r2.out, "4*(x^2*(y*z)) + 8*((x*y)*(x*z))\n");
  EXPECT_EQ(run("linearize --order 3").code, 2);
  EXPECT_EQ(run("linearize --expr 'x +'").code, 2);
}

TEST(Cli, Dump) {
  auto r = run("--dump " + file("example.alg"));
  EXPECT_EQ(r.code, 0);
  auto f = baric::parse_algebra(r.out);
  EXPECT_EQ(f.algebra, baric::testing::fixture("example.alg").algebra);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("check " + file("missing.alg")).code, 2);
  EXPECT_EQ(run("check " + file("zero2.alg") + " deg6").code, 2);
  EXPECT_EQ(run("check " + file("example.alg") + " nonsense").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("check " + file("example.alg") + " deg6 --weight 1,1,0").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, JordanNeedsNoWeight) {
  auto r = run("check " + file("zero2.alg") + " jordan");
  EXPECT_EQ(r.code, 0) << r.out;
}
