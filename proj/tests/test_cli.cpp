#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cantor/catalog.hpp"
#include "cantor/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cantor::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cantor-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ExtractThenVerify) {
  const Result e = run({"extract", "--tree", "catalog:B-triple-ones-complement", "--q", "1/2", "--stages", "3", "--out",
                        path("b.cert")});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(e.out.rfind("certificate stages=3", 0), 0u) << e.out;
  const Result v = run({"verify", "catalog:B-triple-ones-complement", path("b.cert")});
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_EQ(v.out.rfind("verified inequalities=", 0), 0u);
  // The same certificate does not fit another tree.
  EXPECT_EQ(run({"verify", "catalog:fat-cantor-3", path("b.cert")}).code, 1);
}

TEST_F(CliTest, ExtractToStdoutIsDeterministic) {
  const Result a = run({"extract", "--tree", "catalog:full", "--q", "0.75", "--stages", "2"});
  const Result b = run({"extract", "--tree", "catalog:full", "--q", "3/4", "--stages", "2"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("certificate q=3/4 delta=1/8 stages=2\n", 0), 0u) << a.out;
  EXPECT_NE(a.out.find("bound 961/1024"), std::string::npos);
}

TEST_F(CliTest, ExtractRejectsBadQ) {
  const Result r = run({"extract", "--tree", "catalog:full", "--q", "5/4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("q must lie in (0,1)"), std::string::npos) << r.err;
  EXPECT_EQ(run({"extract", "--tree", "catalog:nope", "--q", "1/2"}).code, 1);
  EXPECT_EQ(run({"extract", "--q", "1/2"}).code, 1);
}

TEST_F(CliTest, ExtractReportsExhaustedSearch) {
  const Result r = run({"extract", "--tree", "catalog:B-triple-ones-complement", "--q", "3/4", "--j-cap", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("level search exhausted at stage 1"), std::string::npos) << r.err;
  // w_root = 0 is a validation failure, not an exhausted search.
  std::ofstream(path("thin.tree")) << "alphabet binary\nrule catalog single-branch\n";
  EXPECT_EQ(run({"extract", "--tree", path("thin.tree"), "--q", "1/2"}).code, 1);
}

TEST_F(CliTest, DescriptorTrees) {
  std::ofstream(path("avoid.tree")) << "# the complement of N_011 ∪ N_1\nalphabet binary\nrule avoid 011,1\n";
  const Result m = run({"measure", path("avoid.tree"), "--node", "0", "--depth", "4"});
  EXPECT_EQ(m.code, 0) << m.err;
  EXPECT_EQ(m.out, "3/4 3/4\n");
  const Result e = run({"extract", "--tree", path("avoid.tree"), "--q", "1/2", "--out", path("avoid.cert")});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(run({"verify", path("avoid.tree"), path("avoid.cert")}).code, 0);
  std::ofstream(path("bad.tree")) << "alphabet binary\nrule frobnicate\n";
  const Result bad = run({"measure", path("bad.tree")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
}

TEST_F(CliTest, MeasureThreeQuarters) {
  const Result r = run({"measure", "catalog:B-triple-ones-complement", "--node", "000", "--depth", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3/4 193/256\n");
}

TEST_F(CliTest, Meet) {
  const Result r = run({"meet", "hechler s= f=const:1", "hechler s=3 f=const:2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("hechler s=3 f=", 0), 0u) << r.out;
  const Result x = run({"meet", "cohen s=1", "cohen s=0,4"});
  EXPECT_EQ(x.out, "incompatible: 0,4\n");
  EXPECT_EQ(run({"meet", "cohen s=1", "hechler s= f=const:0"}).code, 1);
}

TEST_F(CliTest, Density) {
  const Result d = run({"density", "--condition", "hechler s=2 f=const:1", "--node", "2,5"});
  EXPECT_EQ(d.out, "dense n_x=1\n");
  const Result n = run({"density", "--target", "catalog:A-triple-ones", "--point", "0", "--horizon", "3"});
  EXPECT_EQ(n.out.substr(0, n.out.find('\n')),
            "not-dense witness=\"random tree=catalog:B-triple-ones-complement\" n≡0 mod 1 n>=0");
  EXPECT_NE(n.out.find("rho 1/4 1/4 1/4 1/4\n"), std::string::npos);
  const Result b = run({"density", "--target", "B-triple-ones-complement", "--point", "0:0", "--horizon", "2"});
  EXPECT_EQ(b.out.rfind("dense n_x=0\nrho 3/4 3/4 3/4\n", 0), 0u) << b.out;
  EXPECT_EQ(run({"density", "--node", "0"}).code, 1);
}

TEST_F(CliTest, Suites) {
  const Result c = run({"suite", "counterexamples", "--depth", "10"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "PASS 5/5");
  const Result p = run({"suite", "positive", "--depth", "6", "--samples", "5"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out.substr(0, p.out.find('\n')), "PASS 6/6");
  const Result m = run({"suite", "meet-fuzz", "--depth", "6", "--pairs", "20"});
  EXPECT_EQ(m.code, 0) << m.out;
  EXPECT_EQ(run({"suite", "nonsense"}).code, 1);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  const Result help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("extract"), std::string::npos);
}
