// Copyright 2026 The lcgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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
#include <sstream>

#include "lc/corpus.hpp"
#include "lc/splits.hpp"

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Result {
  int code = -1;
  std::string out, err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lcgen_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  Result run(const std::string& args, const std::string& env = "") const {
    const std::string cmd = env + " '" LCGEN_CLI_PATH "' " + args + " > '" + path("stdout").string() +
                            "' 2> '" + path("stderr").string() + "'";
    const int status = std::system(cmd.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(path("stdout"));
    r.err = slurp(path("stderr"));
    return r;
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  fs::path dir_;
};

TEST_F(Cli, ReduceExample) {
  write("in.txt", "(\\x0 -> x0) (\\x1 -> x1)\n");
  auto r = run("reduce --lang lc1 --strategy whnf --renaming vr --in " + path("in.txt").string());
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "\\x0 -> x0\n");
  r = run("reduce --lang lc1 --strategy whnf --renaming nvr --steps --in " + path("in.txt").string());
  EXPECT_EQ(r.out, "\\x1 -> x1\t1\n");
  write("in2.txt", "foldr x0 x1 [(), ()]\n");
  r = run("reduce --lang lc2 --strategy dnf --renaming nvr --in " + path("in2.txt").string());
  EXPECT_EQ(r.out, "x0 () (x0 () x1)\n");
}

TEST_F(Cli, EncodeMatchesLibrary) {
  write("in.txt", "ite True () ()\n");
  const auto r = run("encode --in " + path("in.txt").string());
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.back(), '\n');
  EXPECT_EQ(r.out.find("ite"), std::string::npos);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  for (const std::string args :
       {"", "frobnicate", "reduce --lang lc3", "generate --out x", "generate --n 0 --out x",
        "generate --n 5 --out x --config /nonexistent.cfg"}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << args;
    EXPECT_EQ(r.err.rfind("lcgen: E_USAGE: ", 0), 0u) << args << ": " << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << args;
  }
}

TEST_F(Cli, DataErrorsExitThree) {
  write("bad.txt", "\\x0 -> \n");
  auto r = run("reduce --in " + path("bad.txt").string());
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.rfind("lcgen: E_DATA: input line 1", 0), 0u) << r.err;
  write("corpus.jsonl", "{\"id\": 1}\n");
  r = run("stats --corpus " + path("corpus.jsonl").string());
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.rfind("lcgen: E_DATA: ", 0), 0u) << r.err;
  r = run("check --corpus " + path("missing.jsonl").string());
  EXPECT_EQ(r.code, 3);
}

TEST_F(Cli, DivergentInputIsADataError) {
  write("omega.txt", "(\\x0 -> x0 x0) (\\x0 -> x0 x0)\n");
  const auto r = run("reduce --fuel 100 --in " + path("omega.txt").string());
  EXPECT_EQ(r.code, 3);  // a user term that runs out of fuel is bad input
  EXPECT_NE(r.err.find("E_DATA"), std::string::npos);
}

TEST_F(Cli, GenerateIsDeterministicAcrossWorkers) {
  const std::string a = path("a.jsonl").string(), b = path("b.jsonl").string();
  auto r = run("generate --n 300 --seed 5 --workers 1 --out " + a);
  ASSERT_EQ(r.code, 0) << r.err;
  r = run("generate --n 300 --seed 5 --workers 4 --out " + b);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(lc::read_corpus(a).size(), 300u);
  EXPECT_TRUE(fs::exists(a + ".stats.txt"));
  EXPECT_TRUE(fs::exists(a + ".stats.types.csv"));
  r = run("check --corpus " + a);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("inconsistent = 0"), std::string::npos);
}

TEST_F(Cli, ConfigFromEnvironment) {
  write("cfg.txt", "seed = 77\nmax_term_depth = 4\n");
  const std::string a = path("a.jsonl").string(), b = path("b.jsonl").string();
  ASSERT_EQ(run("generate --n 50 --out " + a, "LCGEN_CONFIG='" + path("cfg.txt").string() + "'").code, 0);
  ASSERT_EQ(run("generate --n 50 --config " + path("cfg.txt").string() + " --out " + b).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  ASSERT_EQ(run("generate --n 50 --out " + b).code, 0);
  EXPECT_NE(slurp(a), slurp(b));
  const auto r = run("generate --n 50 --out " + b, "LCGEN_CONFIG=/nonexistent.cfg");
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, FailedCommandLeavesNoOutputs) {
  write("cfg.txt", "max_input_tokens = 1\n");
  const std::string out = path("c.jsonl").string();
  const auto r = run("generate --n 10 --config " + path("cfg.txt").string() + " --out " + out);
  EXPECT_EQ(r.code, 3) << r.err;
  EXPECT_FALSE(fs::exists(out));
  EXPECT_FALSE(fs::exists(out + ".tmp"));
  EXPECT_FALSE(fs::exists(out + ".stats.txt"));
}

TEST_F(Cli, SplitExportScoreRoundTrip) {
  const std::string corpus = path("c.jsonl").string();
  ASSERT_EQ(run("generate --n 400 --seed 3 --out " + corpus).code, 0);
  const std::string man = path("random.split").string();
  auto r = run("split --kind random --corpus " + corpus + " --n-train 300 --n-test 100 --out " + man);
  ASSERT_EQ(r.code, 0) << r.err;
  const lc::SplitManifest m = lc::read_manifest(man);
  EXPECT_EQ(m.test_ids.size(), 100u);

  r = run("export --manifest " + man + " --task lc2,dnf,nvr --side test --out " + path("src.txt").string() + " " +
          path("tgt.txt").string());
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream ids(slurp(path("src.txt.ids"))), tgt(slurp(path("tgt.txt")));
  std::string preds, id, line;
  std::size_t n = 0;
  while (std::getline(ids, id) && std::getline(tgt, line)) {
    preds += id + "\t" + line + "\n";
    ++n;
  }
  EXPECT_EQ(n, 100u);
  write("preds.tsv", preds);
  const std::string report = path("report.txt").string();
  r = run("score --manifest " + man + " --task lc2,dnf,nvr --preds " + path("preds.tsv").string() + " --out " +
          report);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(slurp(report).find("100/100 exact"), std::string::npos) << slurp(report);
  EXPECT_TRUE(fs::exists(report + ".lc2_dnf_nvr.input_length.csv"));
  EXPECT_TRUE(fs::exists(report + ".lc2_dnf_nvr.output_length.csv"));

  // mismatched --task/--preds counts
  r = run("score --manifest " + man + " --task lc2,dnf,nvr --task lc1,dnf,vr --preds " +
          path("preds.tsv").string());
  EXPECT_EQ(r.code, 2);
  // prediction for an id outside the test side
  write("stray.tsv", "999999\tx0\n");
  r = run("score --manifest " + man + " --task lc2,dnf,nvr --preds " + path("stray.tsv").string());
  EXPECT_EQ(r.code, 3);

  for (const char* kind : {"type", "composition", "steps"}) {
    const std::string out = path(std::string(kind) + ".split").string();
    r = run(std::string("split --kind ") + kind + " --corpus " + corpus + " --n-train 200 --n-test 20 --n-out 10 " +
            "--out " + out);
    EXPECT_EQ(r.code, 0) << kind << ": " << r.err;
  }
}

}  // namespace
