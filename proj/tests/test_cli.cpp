// End-to-end tests of the texlab executable: exit codes, output formats,
// and byte-identical reruns.

#include "texlab/io.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>

using namespace texlab;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(TEXLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / "texlab_cli_test";
    std::filesystem::create_directories(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::filesystem::path dir_;
};

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string l;
  while (std::getline(ss, l)) out.push_back(l);
  return out;
}

}  // namespace

TEST_F(Cli, NoArgumentsIsUsageError) { EXPECT_EQ(run("").code, 2); }

TEST_F(Cli, HelpSucceeds) { EXPECT_EQ(run("--help").code, 0); }

TEST_F(Cli, BellTable) {
  const auto r = run("examples bell");
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 8u);
  EXPECT_EQ(ls[0], "measure,psi_plus,psi_minus");
  EXPECT_EQ(ls[1], "trace,0.707106781187,1");
  EXPECT_EQ(ls[5], "rel_entropy,inf,inf");
  EXPECT_EQ(ls[7], "rugosity,0.69314718056,inf");
}

TEST_F(Cli, FamiliesCsv) {
  const auto out = path("families.csv");
  ASSERT_EQ(run("examples families --grid 100 --out " + out).code, 0);
  const auto ls = lines(read_text_file(out));
  ASSERT_EQ(ls.size(), 102u);
  EXPECT_EQ(ls[0], "alpha,T_tr_sigma,T_tr_tau,rugosity_sigma,rugosity_tau");
  EXPECT_EQ(ls[1], "0,0.75,0.809016994375,1.38629436112,1.38629436112");
  EXPECT_EQ(ls[101].substr(0, 8), "1,0.5,0.");
}

TEST_F(Cli, MeasureJsonRoundTrip) {
  const auto state = path("tau.json");
  ASSERT_EQ(run("state --kind tau --alpha 0.3 --out " + state).code, 0);
  const auto back = read_state_file(state);
  EXPECT_LE(max_abs(back.matrix() - tau_alpha(0.3).matrix()), 1e-15);

  const auto r = run("measure --in " + state + " --json");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["measures"]["trace"].get<double>(), 0.7713430220938282, 1e-12);
  EXPECT_EQ(j["measures"]["robustness"], "inf");
  EXPECT_EQ(j["measures"]["rel_entropy"], "inf");
  EXPECT_NEAR(j["overlap"].get<double>(), 0.325, 1e-15);

  const auto sub = json::parse(run("measure --in " + state + " --json --measures trace,l1").out);
  EXPECT_EQ(sub["measures"].size(), 2u);
}

TEST_F(Cli, MeasureTable) {
  const auto state = path("f1.json");
  ASSERT_EQ(run("state --kind f1 --dim 3 --out " + state).code, 0);
  const auto r = run("measure --in " + state + " --table --measures robustness,rugosity");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("robustness 0\n"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("measure --in " + path("missing.json")).code, 4);
  const auto garbage = path("garbage.json");
  write_text_file(garbage, "not json");
  EXPECT_EQ(run("measure --in " + garbage).code, 2);
  const auto bad = path("bad.json");
  write_text_file(bad, R"({"dim": 2, "re": [[1,0],[0,1]], "im": [[0,0],[0,0]]})");
  EXPECT_EQ(run("measure --in " + bad).code, 3);
  const auto ok = path("ok.json");
  ASSERT_EQ(run("state --kind f1 --dim 2 --out " + ok).code, 0);
  EXPECT_EQ(run("measure --in " + ok + " --measures bogus").code, 2);
  EXPECT_EQ(run("gibbs --energies 0,x --tmin 1 --tmax 2 --steps 2").code, 2);
  EXPECT_EQ(run("gibbs --dim 2 --tmin 0 --tmax 2 --steps 2").code, 2);
  EXPECT_EQ(run("gibbs --dim 2 --tmin -1 --tmax 2 --steps 2").code, 2);
  EXPECT_EQ(run("verify --suite nope").code, 2);
  EXPECT_EQ(run("examples families --grid 10 --out /nonexistent/dir/x.csv").code, 4);
}

TEST_F(Cli, GibbsCsv) {
  const auto r = run("gibbs --energies 0,1 --tmin 1 --tmax 1 --steps 1 --coherent");
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0], "T,T_F_gibbs,T_B_gibbs,T_F_coherent,T_B_coherent");
  EXPECT_EQ(ls[1], "1,0.5,0.585786437627,0.056590558015,0.0574146690711");
  const auto logr = run("gibbs --dim 3 --tmin 0.1 --tmax 10 --steps 3 --log");
  EXPECT_EQ(lines(logr.out)[2].substr(0, 2), "1,");
}

TEST_F(Cli, TexturePlot) {
  const auto state = path("bell.json");
  ASSERT_EQ(run("state --kind bell- --out " + state).code, 0);
  ASSERT_EQ(run("textureplot --in " + state + " --out-re " + path("re.csv") + " --out-im " + path("im.csv")).code, 0);
  const auto re = lines(read_text_file(path("re.csv")));
  ASSERT_EQ(re.size(), 5u);
  EXPECT_EQ(re[0], "row,c0,c1,c2,c3");
  EXPECT_EQ(re[1], "0,0.5,0,0,-0.5");
  EXPECT_EQ(lines(read_text_file(path("im.csv")))[1], "0,0,0,0,0");
}

TEST_F(Cli, VerifyEmitsOneJsonLinePerReport) {
  const auto r = run("verify --suite axioms --dims 2,3 --trials 30 --seed 7 --measures trace,l1");
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 6u);
  for (const auto& l : ls) {
    const auto j = json::parse(l);
    EXPECT_TRUE(j["passed"].get<bool>()) << l;
    EXPECT_EQ(j["seed"], derive_seed(7, j["name"].get<std::string>().starts_with("l1") ? 7 : 1));
  }
}

TEST_F(Cli, SeedFromEnvironmentAndFlag) {
  const std::string args = "verify --suite gibbs --dims 2 --trials 50";
  const auto env = run(args, "TEXLAB_SEED=99");
  const auto flag = run(args + " --seed 99");
  const auto other = run(args + " --seed 98");
  EXPECT_EQ(env.out, flag.out);
  EXPECT_NE(flag.out, other.out);
  EXPECT_EQ(run(args + " --seed 99", "TEXLAB_SEED=5").out, flag.out);
}

TEST_F(Cli, RerunsAreByteIdentical) {
  for (const std::string args : {"verify --suite falsify --dims 2,3 --trials 20 --seed 3", "examples bell",
                                 "gibbs --dim 4 --tmin 0.5 --tmax 5 --steps 7 --coherent"}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args;
  }
}
