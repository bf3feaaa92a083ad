// Copyright 2026 The onionpeel Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Result {
  int rc = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("onionpeel-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string slurp(const std::string& name) const {
    std::ifstream f(path(name));
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  // Runs the CLI with `args`, stdin from `in` (a file in the test dir) if given.
  Result run(const std::string& args, const std::string& in = "") const {
    std::string cmd = std::string("'") + ONIONPEEL_CLI + "' " + args;
    cmd += in.empty() ? " < /dev/null" : " < '" + path(in) + "'";
    cmd += " 2> '" + path("stderr.txt") + "'";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp("stderr.txt");
    return r;
  }

  fs::path dir_;
};

TEST_F(Cli, GenThenTriangulateCycle) {
  Result gen = run("gen cycle 4 --out '" + path("c4.epg") + "'");
  ASSERT_EQ(gen.rc, 0) << gen.err;
  Result tri = run("triangulate --json '" + path("trace.json") + "'", "c4.epg");
  ASSERT_EQ(tri.rc, 0) << tri.err;
  Json trace = Json::parse(slurp("trace.json"));
  EXPECT_EQ(trace["k_in"], 1);
  EXPECT_EQ(trace["k_out"], 2);
  write("k4.epg", tri.out);
  Result peel = run("peel", "k4.epg");
  EXPECT_EQ(Json::parse(peel.out)["k"], 2);
}

TEST_F(Cli, PipelineOnCounterexample) {
  ASSERT_EQ(run("gen counterexample 2 --out '" + path("g2.epg") + "'").rc, 0);
  Result p = run("pipeline", "g2.epg");
  ASSERT_EQ(p.rc, 0) << p.err;
  Json j = Json::parse(p.out);
  EXPECT_EQ(j["k_in"], 2);
  EXPECT_LE(j["bd_width"].get<int>(), 4);
  EXPECT_LE(j["tw_bound"].get<int>(), 5);
  EXPECT_EQ(j["input_digest"].get<std::string>().rfind("sha256:", 0), 0u);
  EXPECT_EQ(j["input_digest"].get<std::string>().size(), 7u + 64u);
  EXPECT_FALSE(j.contains("timings_ms"));
  EXPECT_TRUE(Json::parse(run("pipeline --timings", "g2.epg").out).contains("timings_ms"));
}

TEST_F(Cli, MalformedInputExitsOne) {
  write("bad.epg", "epg 1\nv 0: 1\nv 1:\nouter 0 1\n");
  Result r = run("peel", "bad.epg");
  EXPECT_EQ(r.rc, 1);
  EXPECT_NE(r.err.find("AsymmetricAdjacency"), std::string::npos);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").rc, 2);
  EXPECT_EQ(run("frobnicate").rc, 2);
  EXPECT_EQ(run("oracle theorem1 3").rc, 2);
  EXPECT_EQ(run("oracle nothing").rc, 2);
  EXPECT_EQ(run("peel --in '" + path("missing.epg") + "'").rc, 2);
  EXPECT_EQ(run("gen grid 3").rc, 1);
}

TEST_F(Cli, VerifyEveryArtifact) {
  ASSERT_EQ(run("gen nested 3 --out '" + path("t3.epg") + "'").rc, 0);
  ASSERT_EQ(run("peel --json '" + path("peel.json") + "'", "t3.epg").rc, 0);
  ASSERT_EQ(run("forest --out '" + path("sat.epg") + "' --json '" + path("forest.json") + "'", "t3.epg").rc, 0);
  ASSERT_EQ(run("disk --out '" + path("disk.epg") + "' --json '" + path("trace.json") + "'", "t3.epg").rc, 0);
  ASSERT_EQ(run("bd --out '" + path("bdisk.epg") + "' --json '" + path("bd.json") + "'", "t3.epg").rc, 0);
  ASSERT_EQ(run("pipeline --json '" + path("pipe.json") + "'", "t3.epg").rc, 0);
  EXPECT_EQ(run("verify '" + path("peel.json") + "'", "t3.epg").rc, 0);
  EXPECT_EQ(run("verify '" + path("forest.json") + "'", "sat.epg").rc, 0);
  EXPECT_EQ(run("verify '" + path("trace.json") + "'", "disk.epg").rc, 0);
  EXPECT_EQ(run("verify '" + path("bd.json") + "'", "bdisk.epg").rc, 0);
  EXPECT_EQ(run("verify '" + path("pipe.json") + "'", "t3.epg").rc, 0);
  Result plain = run("verify", "t3.epg");
  ASSERT_EQ(plain.rc, 0);
  EXPECT_EQ(Json::parse(plain.out)["k"], 3);

  Json bd = Json::parse(slurp("bd.json"));
  bd["width"] = 1;
  write("bad.json", bd.dump());
  Result bad = run("verify '" + path("bad.json") + "'", "bdisk.epg");
  EXPECT_EQ(bad.rc, 1);
  EXPECT_NE(bad.err.find("InvalidArtifact"), std::string::npos);
}

TEST_F(Cli, Oracles) {
  ASSERT_EQ(run("gen wheel 3 --out '" + path("k4.epg") + "'").rc, 0);
  EXPECT_EQ(Json::parse(run("oracle bw", "k4.epg").out)["value"], 3);
  EXPECT_EQ(Json::parse(run("oracle outerplanarity", "k4.epg").out)["value"], 2);
  EXPECT_EQ(run("oracle bw --budget-edges 5", "k4.epg").rc, 1);
  Json t = Json::parse(run("oracle theorem1 2").out);
  EXPECT_EQ(t["triangulations"], 132);
  EXPECT_EQ(t["min_outerplanarity"], 3);
  EXPECT_TRUE(t["holds"].get<bool>());
}

TEST_F(Cli, RandomFamilyIsSeeded) {
  Result a = run("gen random 3 --width 5 --seed 11");
  Result b = run("gen random 3 --width 5 --seed 11");
  Result c = run("gen random 3 --width 5 --seed 12");
  ASSERT_EQ(a.rc, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST_F(Cli, DotOutput) {
  ASSERT_EQ(run("gen path 3 --dot '" + path("p.dot") + "'").rc, 0);
  EXPECT_EQ(slurp("p.dot").rfind("graph embedding {", 0), 0u);
}

}  // namespace
