#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hindrance/io.hpp"

using namespace hindrance;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HINDRANCE_TEST_DATA) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("hindrance_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, HinderThenVerify) {
  Result r = run({"hinder", data("fan.web")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "kind hindrance\nseparator v\nhpath a1 v\n");
  Result v = run({"verify", data("fan.web"), write("cert", r.out)});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(v.out, "ok\n");
}

TEST_F(CliTest, HinderNotWasteful) {
  Result r = run({"hinder", data("swap.web")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error:NotWasteful:", 0), 0u) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, InputErrors) {
  Result bad = run({"solve", data("bad.web")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.err, "error:ParseError:line 2: duplicate 'vertex'\n");

  Result missing = run({"solve", data("nope.web")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(missing.err.rfind("error:FileNotFound:", 0), 0u);

  Result usage = run({"frobnicate"});
  EXPECT_EQ(usage.code, 1);
  EXPECT_EQ(usage.err.rfind("error:Usage:", 0), 0u);

  Result invalid = run({"solve", write("loop.web", "vertex a\nvertex b\nedge a a\nedge b b\n")});
  EXPECT_EQ(invalid.code, 1);
  EXPECT_EQ(invalid.err, "error:LoopEdge:a->a\nerror:LoopEdge:b->b\n");
}

TEST_F(CliTest, OracleCap) {
  Result r = run({"oracle", data("fan.web"), "--cap", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error:CapExceeded:", 0), 0u) << r.err;
}

TEST_F(CliTest, OracleOutputVerifies) {
  for (const char* file : {"fan.web", "swap.web"}) {
    Result r = run({"oracle", data(file)});
    ASSERT_EQ(r.code, 0) << r.err;
    Result v = run({"verify", data(file), write("cert", r.out)});
    EXPECT_EQ(v.code, 0) << file << ": " << v.err;
  }
  EXPECT_NE(run({"oracle", data("swap.web")}).out.find("kind no-hindrance\n"), std::string::npos);
}

TEST_F(CliTest, SolveVerifies) {
  Result r = run({"solve", data("swap.web")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("kind max-linkage\n", 0), 0u);
  Result v = run({"verify", data("swap.web"), write("cert", r.out)});
  EXPECT_EQ(v.code, 0) << v.err;
}

TEST_F(CliTest, Deterministic) {
  for (const char* cmd : {"solve", "hinder", "eliminate", "oracle"}) {
    Result a = run({cmd, data("fan.web")}), b = run({cmd, data("fan.web")});
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_EQ(a.code, b.code) << cmd;
  }
  Result g1 = run({"gen", "--seed", "5", "--n", "7"}), g2 = run({"gen", "--seed", "5", "--n", "7"});
  EXPECT_EQ(g1.out, g2.out);
}

TEST_F(CliTest, TamperedCertificatesRejected) {
  Result wrong_separator = run({"verify", data("fan.web"), write("c1", "separator b1\nhpath a1 v b1\n")});
  EXPECT_EQ(wrong_separator.code, 2);
  EXPECT_EQ(wrong_separator.err.rfind("error:InvalidCertificate:", 0), 0u);

  Result short_linkage =
      run({"verify", data("swap.web"), write("c2", "kind max-linkage\npath a1 p1 p2 b1\nseparator p1 p2\n")});
  EXPECT_EQ(short_linkage.code, 2);

  Result bad_token = run({"verify", data("fan.web"), write("c3", "separator zz\n")});
  EXPECT_EQ(bad_token.code, 1);

  Result false_negative = run({"verify", data("fan.web"), write("c4", "kind no-hindrance\n")});
  EXPECT_EQ(false_negative.code, 2);
}

TEST_F(CliTest, EliminateTrace) {
  Result r = run({"eliminate", data("fan.web"), "--invariants"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("threshold 2\nstep 0\nsinks b1 b2\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("limit fixpoint\nsinks v\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("invariants ok\n"), std::string::npos);
  Result v = run({"verify", data("fan.web"), write("trace", r.out)});
  EXPECT_EQ(v.code, 0) << v.err;

  std::string tampered = r.out;
  tampered.replace(tampered.find("limit fixpoint\nsinks v"), 22, "limit fixpoint\nsinks b1");
  EXPECT_EQ(run({"verify", data("fan.web"), write("bad", tampered)}).code, 2);
}

TEST_F(CliTest, BipartiteHinder) {
  Result r = run({"hinder", data("crowded.bip")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("hindered x1 x2 x3 x4\n"), std::string::npos) << r.out;
  Result v = run({"verify", data("crowded.bip"), write("cert", r.out)});
  EXPECT_EQ(v.code, 0) << v.err;
  std::string tampered = r.out;
  tampered.replace(tampered.find("hindered x1 x2 x3 x4"), 20, "hindered x1 x2 x4");
  EXPECT_EQ(run({"verify", data("crowded.bip"), write("bad", tampered)}).code, 2);
}

TEST_F(CliTest, GenParses) {
  Result r = run({"gen", "--seed", "3", "--n", "8", "--p", "0.4", "--sources", "2", "--sinks", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  io::Input in = io::parse_input(r.out);
  EXPECT_EQ(in.web.vertex_count(), 8u);
  EXPECT_EQ(in.web.sources().size(), 2u);
  EXPECT_EQ(in.web.sinks().size(), 3u);
  EXPECT_EQ(run({"gen", "--n", "3", "--sources", "2", "--sinks", "2"}).code, 1);
}
