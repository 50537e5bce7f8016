#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "tokslide/io.hpp"

namespace tokslide {
namespace {

namespace fs = std::filesystem;

std::string data(const std::string& name) { return std::string(TOKSLIDE_TEST_DATA) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("tokslide-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SolveWithOracle) {
  Outcome r = run({"solve", "--method", "oracle", data("p3-vc.inst")});
  EXPECT_EQ(r.code, cli::kYes);
  EXPECT_EQ(r.out, "YES 1\n");
}

TEST_F(CliTest, SolveNo) {
  std::string inst = io::read_file(data("p3-vc.inst"));
  inst.replace(inst.find("budget 1"), 8, "budget 0");
  io::write_file(tmp("p3-b0.inst"), inst);
  Outcome r = run({"solve", "--method", "oracle", tmp("p3-b0.inst")});
  EXPECT_EQ(r.code, cli::kNo);
  EXPECT_EQ(r.out, "NO\n");
}

TEST_F(CliTest, SolveWithExpression) {
  Outcome r = run({"solve", "--method", "cw", data("edge.inst"), "--expr", data("edge.cwx")});
  EXPECT_EQ(r.code, cli::kYes);
  EXPECT_EQ(r.out, "YES 0\n");
  EXPECT_EQ(run({"solve", "--method", "cw", data("edge.inst")}).code, cli::kError);
  EXPECT_EQ(run({"solve", "--method", "oracle", data("edge.inst"), "--expr", data("edge.cwx")}).code, cli::kError);
}

TEST_F(CliTest, MethodsAgree) {
  for (const char* file : {"small-split.inst", "bridged-triangles.inst"}) {
    Outcome oracle = run({"solve", "--method", "oracle", data(file)});
    Outcome automatic = run({"solve", data(file)});
    EXPECT_EQ(oracle.out, automatic.out) << file;
    EXPECT_EQ(oracle.code, automatic.code);
  }
  EXPECT_EQ(run({"solve", "--method", "split", data("small-split.inst")}).out, "YES 1\n");
  EXPECT_EQ(run({"solve", "--method", "fvs-fpt", data("bridged-triangles.inst")}).out, "YES 2\n");
  Outcome mismatch = run({"solve", "--method", "fvs-fpt", data("p3-vc.inst")});
  EXPECT_EQ(mismatch.code, cli::kError);
  EXPECT_NE(mismatch.err.find("feedback vertex set"), std::string::npos);
}

TEST_F(CliTest, WitnessRoundTrip) {
  Outcome r = run({"solve", "--method", "split", data("small-split.inst"), "--witness", tmp("w.txt")});
  ASSERT_EQ(r.code, cli::kYes);
  Outcome v = run({"verify", data("small-split.inst"), tmp("w.txt")});
  EXPECT_EQ(v.code, cli::kYes);
  EXPECT_EQ(v.out.substr(0, 11), "FEASIBLE 1\n");
  Outcome stdout_witness = run({"solve", "--method", "oracle", data("p3-vc.inst"), "--witness", "-"});
  EXPECT_EQ(stdout_witness.out, "YES 1\nmove v1 v2\n");
}

TEST_F(CliTest, Verify) {
  Outcome good = run({"verify", data("p3-vc.inst"), data("good-moves.txt")});
  EXPECT_EQ(good.code, cli::kYes);
  EXPECT_EQ(good.out, "FEASIBLE 1\nfinal {v2}\n");
  Outcome bad = run({"verify", data("p3-vc.inst"), data("bad-moves.txt")});
  EXPECT_EQ(bad.code, cli::kError);
  EXPECT_NE(bad.err.find("not an edge"), std::string::npos);
  io::write_file(tmp("none.txt"), "");
  Outcome idle = run({"verify", data("p3-vc.inst"), tmp("none.txt")});
  EXPECT_EQ(idle.code, cli::kNo);
  EXPECT_EQ(idle.out, "INFEASIBLE 0\nfinal {v1}\n");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kError);
  EXPECT_EQ(run({"solve", "--method", "magic", data("p3-vc.inst")}).code, cli::kError);
  EXPECT_EQ(run({"solve", tmp("missing.inst")}).code, cli::kError);
  io::write_file(tmp("broken.inst"), "graph 2 5\n");
  EXPECT_EQ(run({"solve", tmp("broken.inst")}).code, cli::kError);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, OracleCap) {
  Outcome capped = run({"oracle", data("bridged-triangles.inst"), "--cap", "2"});
  EXPECT_EQ(capped.code, cli::kError);
  EXPECT_NE(capped.err.find("cap"), std::string::npos);
  ::setenv(cli::kOracleCapEnv, "2", 1);
  EXPECT_EQ(run({"oracle", data("bridged-triangles.inst")}).code, cli::kError);
  ::setenv(cli::kOracleCapEnv, "bogus", 1);
  EXPECT_EQ(run({"oracle", data("bridged-triangles.inst")}).code, cli::kError);
  ::unsetenv(cli::kOracleCapEnv);
  EXPECT_EQ(run({"oracle", data("bridged-triangles.inst")}).out, "YES 2\n");
}

TEST_F(CliTest, GenerateX3C) {
  Outcome r = run({"generate", "--reduction", "x3c", data("fig1.x3c"), "-o", tmp("fig1.inst"), "--cover", "2", "3", "6",
               "--witness", tmp("fig1.moves")});
  ASSERT_EQ(r.code, cli::kYes) << r.err;
  DiscoveryInstance inst = io::parse_instance(io::read_file(tmp("fig1.inst")));
  EXPECT_EQ(inst.graph.order(), 40u);
  EXPECT_EQ(inst.budget, 12);
  Outcome v = run({"verify", tmp("fig1.inst"), tmp("fig1.moves")});
  EXPECT_EQ(v.code, cli::kYes);
  EXPECT_EQ(v.out.substr(0, 12), "FEASIBLE 12\n");
  EXPECT_EQ(run({"generate", "--reduction", "x3c", data("fig1.x3c"), "--cover", "1", "2", "--witness", tmp("x")}).code,
            cli::kError);
}

TEST_F(CliTest, GenerateOthers) {
  Outcome tri = run({"generate", "--reduction", "triangulate", data("p3-vc.inst")});
  ASSERT_EQ(tri.code, cli::kYes);
  DiscoveryInstance t = io::parse_instance(tri.out);
  EXPECT_EQ(t.graph.order(), 5u);
  EXPECT_EQ(t.problem, Problem::FeedbackVertexSet);

  Outcome dv = run({"generate", "--reduction", "diam-vc", data("p3-vc.inst"), "--k", "1"});
  ASSERT_EQ(dv.code, cli::kYes) << dv.err;
  DiscoveryInstance d = io::parse_instance(dv.out);
  EXPECT_EQ(d.graph.order(), 4u);
  EXPECT_EQ(d.tokens(), 2u);
  EXPECT_EQ(d.budget, 4);

  Outcome df = run({"generate", "--reduction", "diam-fvs", data("p3-vc.inst"), "--k", "0"});
  ASSERT_EQ(df.code, cli::kYes) << df.err;
  EXPECT_EQ(io::parse_instance(df.out).graph.order(), 8u);

  Outcome s = run({"generate", "--reduction", "search", data("p3-vc.inst"), "--k", "1", "--problem", "DS", "--placement",
               "v3"});
  ASSERT_EQ(s.code, cli::kYes) << s.err;
  DiscoveryInstance sd = io::parse_instance(s.out);
  EXPECT_EQ(sd.budget, 2);
  EXPECT_EQ(sd.problem, Problem::DominatingSet);
  EXPECT_EQ(run({"generate", "--reduction", "search", data("p3-vc.inst"), "--k", "1"}).code, cli::kError);
}

TEST_F(CliTest, Enumerate) {
  Outcome covers = run({"enumerate", "--what", "covers", data("small-split.inst")});
  EXPECT_EQ(covers.out, "{a b}\n{a d}\n{b c}\n");
  Outcome mis = run({"enumerate", "--what", "mis", data("small-split.inst")});
  EXPECT_EQ(mis.out, "{a d}\n{b c}\n{c d}\n");
  Outcome reps = run({"enumerate", "--what", "reps", "--k", "2", data("bridged-triangles.inst")});
  EXPECT_EQ(reps.out, "{a b c} {d e f}\n");
  EXPECT_EQ(run({"enumerate", "--what", "covers", data("bridged-triangles.inst")}).code, cli::kError);
}

}  // namespace
}  // namespace tokslide
