#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int status;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string r = "'";
  for (char c : s) r += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return r + "'";
}

// Runs the CLI with the given (already quoted) arguments; stdout only.
CliRun run(const std::string& args) {
  const std::string cmd = std::string(QGROUPS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, NormalizeU) {
  const CliRun r = run("normalize uq " + quote("E*F"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "-(q/(q^2 - 1))*K^-1 + (q/(q^2 - 1))*K + F*E\n");
}

TEST(Cli, NormalizeO) {
  const CliRun r = run("normalize oq " + quote("X11*X22"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 + q*X12*X21\n");
}

TEST(Cli, NormalizeIsIdempotent) {
  for (const std::string e : {"E*F*E + K^-1*F", "F^2*E^2 - K", "(E + F)^3"}) {
    const CliRun once = run("normalize uq " + quote(e));
    ASSERT_EQ(once.status, 0) << e;
    std::string first = once.out;
    first.pop_back();
    EXPECT_EQ(run("normalize uq -- " + quote(first)).out, once.out) << e;
  }
  for (const std::string e : {"X22*X11*X12", "X21*X12 + X22^2*X11"}) {
    const CliRun once = run("normalize oq " + quote(e));
    ASSERT_EQ(once.status, 0) << e;
    std::string first = once.out;
    first.pop_back();
    EXPECT_EQ(run("normalize oq -- " + quote(first)).out, once.out) << e;
  }
}

TEST(Cli, LeadingMinusNeedsSeparator) {
  EXPECT_EQ(run("normalize uq -- " + quote("-K + F")).out, "-K + F\n");
  EXPECT_EQ(run("pair -- " + quote("-K") + " X11").out, "-q\n");
}

TEST(Cli, Pair) {
  EXPECT_EQ(run("pair K X11").out, "q\n");
  EXPECT_EQ(run("pair 1 X12").out, "0\n");
  EXPECT_EQ(run("pair " + quote("E*F") + " " + quote("X11*X22")).out, "q\n");
}

TEST(Cli, Act) {
  const CliRun r = run("act 2 F");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "u -> Fu\nFu -> (q + q^-1)*F^(2)u\nF^(2)u -> 0\n");
  EXPECT_EQ(run("act 1 E --vector 0,1").out, "u\n");
  EXPECT_EQ(run("act 1 E --vector 0,1,2").status, 2);
}

TEST(Cli, Invariants) {
  EXPECT_EQ(run("invariants " + quote("E*K^-1") + " --degree 1 --exact").out, "X22\nX21\n");
  EXPECT_EQ(run("invariants " + quote("E*K^-1") + " --degree 2 --exact").out, "X22^2\nX21*X22\nX21^2\n");
}

TEST(Cli, CoidealCheckExitCodes) {
  EXPECT_EQ(run(quote("coideal-check") + " " + quote("E*K^-1") + " K^2 --degree 2").status, 0);
  EXPECT_EQ(run("coideal-check E --degree 2").status, 1);
}

TEST(Cli, Takeuchi) {
  const CliRun r = run("takeuchi X22 --degree 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "-1 + X22\n");
}

TEST(Cli, HopfCheckPassesAndFaultIsCaught) {
  EXPECT_EQ(run("hopf-check --algebra uq --samples 5 --degree 1").status, 0);
  EXPECT_EQ(run("hopf-check --algebra oq --samples 5 --degree 1").status, 0);
  const CliRun bad = run("hopf-check --algebra uq --samples 0 --degree 1 --inject-fault");
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

TEST(Cli, HopfCheckJson) {
  const CliRun r = run("hopf-check --algebra uq --samples 2 --degree 1 --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.front(), '[');
}

TEST(Cli, CrystalDotMatchesGolden) {
  const CliRun r = run("crystal " + quote("B(2)(x)B(2)") + " --format dot");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, read_file(std::string(QGROUPS_GOLDEN_DIR) + "/b2_b2.dot"));
}

TEST(Cli, CrystalDecompose) {
  EXPECT_EQ(run("crystal " + quote("B(2)(x)B(2)") + " --decompose").out, "components: 4, 2, 0\n");
  EXPECT_EQ(run("crystal " + quote("B(3)(x)B(1)") + " --decompose").out, "components: 4, 2\n");
}

TEST(Cli, Serre) {
  const CliRun r = run("serre " + quote("2,-1;-1,2"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "E1^2*E2 - (q + q^-1)*E1*E2*E1 + E2*E1^2 = 0\n"
            "F1^2*F2 - (q + q^-1)*F1*F2*F1 + F2*F1^2 = 0\n"
            "E2^2*E1 - (q + q^-1)*E2*E1*E2 + E1*E2^2 = 0\n"
            "F2^2*F1 - (q + q^-1)*F2*F1*F2 + F1*F2^2 = 0\n");
  EXPECT_EQ(run("serre " + quote("[[2,-1],[-1,2]]")).out, r.out);
  EXPECT_EQ(run("serre " + quote("[[2]]")).out, "(no Serre relations in rank 1)\n");
  EXPECT_EQ(run("serre " + quote("[[2,1],[0,2]]")).status, 2);
  EXPECT_EQ(run("serre " + quote("2,x;-1,2")).status, 2);
}

TEST(Cli, Vocke) {
  const CliRun r = run("vocke --degree 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run("vocke --lambda-prime 1").status, 2);
  EXPECT_EQ(run("vocke --lambda 0").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("normalize uq E --no-such-flag").status, 2);
  EXPECT_EQ(run("normalize xx E").status, 2);
  EXPECT_EQ(run("normalize uq " + quote("E*")).status, 2);
  EXPECT_EQ(run("pair E " + quote("X11*")).status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, OutWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "qgroups_cli_out_test.txt";
  std::filesystem::remove(path);
  const CliRun r = run("normalize oq X11 --out " + quote(path.string()));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path.string()), "X11\n");
  std::filesystem::remove(path);
}
