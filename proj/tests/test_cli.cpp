#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kink/cli.hpp"

using namespace kink;

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(KINK_SAMPLES_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() / (std::string("kink-cli-") + info->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text = {}) const {
    const auto p = (path_ / name).string();
    if (!text.empty()) std::ofstream(p) << text;
    return p;
  }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, Inertia) {
  const auto r = run({"inertia", sample("counterexample.sym")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6 0 0\n");
}

TEST(Cli, Determinant) {
  EXPECT_EQ(run({"det", sample("counterexample.sym")}).out, "3\n");
  EXPECT_EQ(run({"det", sample("rational.sym")}).out, "-61/4\n");
}

TEST(Cli, VerifyWorkedChains) {
  auto r = run({"verify", sample("five.trace"), sample("a6.trace")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("five.trace: valid"), std::string::npos);
  EXPECT_NE(r.out.find("a6.trace: valid"), std::string::npos);

  r = run({"verify", sample("five.trace"), sample("five-tampered.trace")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("five-tampered.trace: invalid at step"), std::string::npos);
}

TEST(Cli, VerifyAudit) {
  const auto r = run({"verify", "--audit", sample("five.trace")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("step 0: size 1, inertia 1 0 0, |det| 5"), std::string::npos);
  EXPECT_NE(r.out.find("step 4: size 1, inertia 0 1 0, |det| 5"), std::string::npos);
}

TEST(Cli, Stats) {
  auto r = run({"stats", sample("a6.trace")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("neg_kinks: 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("pos_unkinks: 6\n"), std::string::npos);
  r = run({"stats", sample("five-tampered.trace")});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, ReduceWritesVerifyingTrace) {
  TempDir dir;
  for (const char* target : {"neg", "pos", "neg-semi", "pos-semi"}) {
    const std::string trace = dir.file(std::string(target) + ".trace");
    auto r = run({"reduce", sample("rational.sym"), "--target", target, "--out", trace});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("sym ", 0), 0u);
    r = run({"verify", trace});
    EXPECT_EQ(r.code, 0) << r.out;
  }
  const auto r = run({"reduce", sample("five.sym")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("trace\n5\n", 0), 0u);
  EXPECT_NE(r.out.find("end -5\n"), std::string::npos);
}

TEST(Cli, ReduceErrors) {
  TempDir dir;
  EXPECT_EQ(run({"reduce", sample("five.sym"), "--target", "sideways"}).code, 2);
  const std::string singular = dir.file("singular.sym", "sym 2\n1 0\n0 0\n");
  const auto r = run({"reduce", singular, "--target", "neg"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SingularForDefiniteTarget"), std::string::npos);
  EXPECT_EQ(run({"reduce", singular, "--target", "neg-semi"}).code, 0);
}

TEST(Cli, FourSquares) {
  EXPECT_EQ(run({"foursquares", "7"}).out, "2 1 1 1\n");
  EXPECT_EQ(run({"foursquares", "0"}).out, "0 0 0 0\n");
  EXPECT_EQ(run({"foursquares", "-1"}).code, 2);
  EXPECT_EQ(run({"foursquares", "x"}).code, 2);
}

TEST(Cli, Cct) {
  EXPECT_EQ(run({"cct", "search", sample("counterexample.sym")}).out, "NONE\n");
  EXPECT_EQ(run({"cct", "search", sample("binary.sym")}).out.rfind("mat 2 ", 0), 0u);

  const auto icct = run({"cct", "icct", sample("column.mat")});
  EXPECT_EQ(icct.code, 0);
  EXPECT_EQ(icct.out.rfind("trace\n2 1; 1 2\n", 0), 0u);
  EXPECT_NE(icct.out.find("end -3\n"), std::string::npos);

  EXPECT_EQ(run({"cct", "reduce2", sample("binary.sym")}).out.rfind("sym 2\n5 2\n2 5\nmat 2 2\n", 0), 0u);
  EXPECT_EQ(run({"cct", "reduce2", sample("counterexample.sym")}).code, 2);
  EXPECT_EQ(run({"cct"}).code, 2);
}

TEST(Cli, Goeritz) {
  EXPECT_EQ(run({"goeritz", sample("figure.diagram")}).out, "sym 3\n2 -1 0\n-1 4 -1\n0 -1 3\n");
  EXPECT_EQ(run({"goeritz", sample("trefoil-dark.diagram")}).out, "sym 1\n3\n");
  EXPECT_EQ(run({"goeritz", sample("trefoil-light.diagram")}).out, "sym 2\n-2 1\n1 -2\n");
  TempDir dir;
  const auto r = run({"goeritz", dir.file("bad.diagram", "regions 2\n0 0 +\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, QuadraticForm) {
  EXPECT_EQ(run({"qform", "5*x1^2 + 6*x1*x2 + 6*x2^2"}).out, "sym 2\n5 3\n3 6\n");
  EXPECT_EQ(run({"qform", "x1*x2"}).out, "sym 2\n0 1/2\n1/2 0\n");
  EXPECT_EQ(run({"qform", "x1^3"}).code, 2);
}

TEST(Cli, BlowupReport) {
  const auto r = run({"report", "blowup", sample("hyperbolic.sym")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n_plus: 1\nn_minus: 1\n"), std::string::npos);
  EXPECT_EQ(extract_report_traces(r.out).size(), 2u);
  for (const auto& t : extract_report_traces(r.out)) EXPECT_TRUE(verify_trace(t).valid);
  EXPECT_EQ(run({"report", "blowup", sample("five.sym")}).code, 2);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"inertia"}).code, 2);
  EXPECT_EQ(run({"inertia", sample("does-not-exist.sym")}).code, 2);
  TempDir dir;
  EXPECT_EQ(run({"inertia", dir.file("asym.sym", "sym 2\n1 2\n3 4\n")}).code, 2);
  EXPECT_EQ(run({"verify", dir.file("garbage.trace", "trace\nnonsense\n")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
