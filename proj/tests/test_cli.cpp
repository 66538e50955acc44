#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr discarded; returns exit status and stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string(CMF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, Seq) {
  EXPECT_EQ(cli("seq A 0..3").out, "1\n3\n19\n147\n");
  EXPECT_EQ(cli("seq D 2").out, "10\n");
  EXPECT_EQ(cli("seq U3 6").out, "0\n");
  EXPECT_EQ(cli("seq U2 3").out, "-2\n");
  EXPECT_EQ(cli("seq C 0..4 --format json").out, "[1,3,15,93,639]\n");
  EXPECT_EQ(cli("seq A 1,3 --format csv").out, "n,value\n1,3\n3,147\n");
  EXPECT_EQ(cli("seq A 0..3").code, 0);
}

TEST(Cli, Coeff) {
  EXPECT_EQ(cli("coeff gamma 3 7").out, "2\n");
  EXPECT_EQ(cli("coeff beta 3 2").out, "-2\n");
  EXPECT_EQ(cli("coeff alpha 3 5").out, "-6\n");
  EXPECT_EQ(cli("coeff gamma 3 49").out, "-45\n");
}

TEST(Cli, Qexp) {
  EXPECT_EQ(cli("qexp ideal-sum gamma 3 10").out, "[1,0,-3,0,0,0,2,0,9,0]\n");
  EXPECT_EQ(cli("qexp eta alpha 3 9").out, "[1,0,0,0,-6,0,0,0,9]\n");
  EXPECT_EQ(cli("qexp closed-form beta 3 3").out, "[1,-2,-2]\n");
  EXPECT_EQ(cli("qexp closed-form gamma 3 10").out, cli("qexp ideal-sum gamma 3 10").out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("seq E 3").code, 2);
  EXPECT_EQ(cli("seq A x").code, 2);
  EXPECT_EQ(cli("coeff beta 4 3").code, 2);
  EXPECT_EQ(cli("coeff delta 3 3").code, 2);
  EXPECT_EQ(cli("qexp eta gamma 3 10").code, 2);
  EXPECT_EQ(cli("qexp eta alpha 5 10").code, 2);
  EXPECT_EQ(cli("verify --thm thm9.9").code, 2);
  EXPECT_EQ(cli("verify --thm thm1.4 --pmax 0").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("").code, 2);
}

TEST(Cli, IoError) {
  EXPECT_EQ(cli("verify --thm thm1.4 --pmax 20 --out /nonexistent-dir/x.json").code, 3);
}

TEST(Cli, VerifyPassesAndEmitsWitnesses) {
  const auto r = cli("verify --thm thm1.4,thm1.8 --pmax 60 --rmax 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"({"theorem_id":"thm1.4","p":5,"r":1,"m":0,"modulus":5,)"), std::string::npos);
  const auto w = cli("verify --thm counterexample-p2 --pmax 100");
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.out.find(R"("witness_for":"thm1.4")"), std::string::npos);
  EXPECT_NE(w.out.find(R"("witness_for":"thm1.8")"), std::string::npos);
}

TEST(Cli, VerifyByteIdenticalAcrossRunsAndJobs) {
  const auto dir = std::filesystem::temp_directory_path() / "cmf_cli_test";
  std::filesystem::create_directories(dir);
  const std::string base = "verify --thm thm1.4,thm1.9,eq2.1,cor1.2,oracle-agreement --pmax 50 --k 3..5 --nmax 200";
  std::string first;
  int i = 0;
  for (const char* jobs : {"1", "1", "3", "8"}) {
    const auto path = dir / ("out" + std::to_string(i++) + ".json");
    ASSERT_EQ(cli(base + " --jobs " + jobs + " --out " + path.string()).code, 0);
    const auto text = slurp(path);
    ASSERT_FALSE(text.empty());
    if (first.empty())
      first = text;
    else
      EXPECT_EQ(text, first) << "jobs=" << jobs;
  }
  const auto csv1 = cli(base + " --format csv --jobs 1").out;
  const auto csv4 = cli(base + " --format csv --jobs 4").out;
  EXPECT_EQ(csv1, csv4);
  EXPECT_EQ(csv1.rfind("theorem_id,p,r,m,modulus,lhs_reduced,rhs_reduced,pass\n", 0), 0U);
  std::filesystem::remove_all(dir);
}

TEST(Cli, Fit) {
  const auto a = cli("fit A");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "A: (a, b, lambda) = (11, -1, -3), validated through n = 200\n");
  const auto c = cli("fit C");
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("NoFit"), std::string::npos);
  EXPECT_NE(c.out.find("-10/9, 1/9, 1/3"), std::string::npos);
  EXPECT_EQ(cli("fit E").code, 2);
}
