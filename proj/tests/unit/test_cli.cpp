// Copyright 2026 The orderon-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "orderon/io.hpp"

namespace orderon {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / "orderon_lab_cli";
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    std::ofstream(dir_ / "path.txt") << "n=4\n1 2\n2 3\n3 4\n";
    std::ofstream(dir_ / "bad.txt") << "n=3\n1 5\n";
    std::ofstream(dir_ / "edge.json") << R"({"k":2,"edges":[[1,2]]})";
    std::ofstream(dir_ / "zero.json") << R"({"xcuts":[0,1],"values":[[0]]})";
    std::ofstream(dir_ / "star.json") << R"({"xcuts":[0,1],"layers":[[0,0.5,1]],"values":[[1,0],[0,0]]})";
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Runs the tool with `args`, stdout to out.json; returns the exit status.
  int run(const std::string& args) {
    const std::string cmd = std::string(ORDERON_LAB_BIN) + " " + args + " > " + (dir_ / "out.json").string() + " 2> " +
                            (dir_ / "err.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  io::Json output() { return io::load_json(dir_ / "out.json"); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, Density) {
  ASSERT_EQ(run("density --pattern " + path("edge.json") + " --graph " + path("path.txt")), 0);
  EXPECT_DOUBLE_EQ(output().at("value").get<double>(), 6.0 / 16);
}

TEST_F(Cli, CutNormModes) {
  ASSERT_EQ(run("cutnorm --a " + path("star.json") + " --b " + path("zero.json") + " --mode exact"), 0);
  EXPECT_DOUBLE_EQ(output().at("value").get<double>(), 0.25);
  ASSERT_EQ(run("cutnorm --a " + path("star.json") + " --b " + path("zero.json") + " --mode upper"), 0);
  EXPECT_EQ(output().at("exactness"), "upper_bound");
}

TEST_F(Cli, HereditaryOps) {
  ASSERT_EQ(run("hered --graph " + path("path.txt") + " --property threshold --op member"), 0);
  EXPECT_EQ(output().at("member"), false);
  ASSERT_EQ(run("hered --graph " + path("path.txt") + " --property threshold --op dist"), 0);
  EXPECT_GT(output().at("distance").get<double>(), 0.0);
}

TEST_F(Cli, GlobalFlagsAfterSubcommand) {
  ASSERT_EQ(run("hered --graph " + path("path.txt") + " --property threshold --op test --k 3 --seed 4"), 0);
  const io::Json a = output();
  ASSERT_EQ(run("--seed 4 hered --graph " + path("path.txt") + " --property threshold --op test --k 3"), 0);
  EXPECT_EQ(output(), a);
}

TEST_F(Cli, InputErrorsExitOne) {
  EXPECT_EQ(run("density --pattern " + path("edge.json") + " --graph " + path("bad.txt")), 1);
  EXPECT_EQ(run("cutnorm --a " + path("star.json") + " --b " + path("zero.json") + " --mode bogus"), 1);
  EXPECT_EQ(run("run no-such-experiment"), 1);
  EXPECT_EQ(run(""), 1);
}

TEST_F(Cli, FailedExperimentExitsTwo) {
  std::ofstream(dir_ / "cfg.json") << R"({"name":"tester","params":{"n":200,"ks":[4],"seeds":5,"target_k":4,"target_rate":1.01}})";
  EXPECT_EQ(run("--out " + path("res") + " --config " + path("cfg.json") + " run tester"), 2);
  EXPECT_TRUE(fs::exists(dir_ / "res" / "tester.json"));
}

}  // namespace
}  // namespace orderon
