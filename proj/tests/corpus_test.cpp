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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "lc/corpus.hpp"
#include "lc/reduce.hpp"
#include "lc/syntax.hpp"
#include "lc/typecheck.hpp"

namespace lc {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CorpusTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    GenConfig cfg;
    cfg.seed = 2024;
    corpus_ = new Corpus(build_corpus_serial(cfg, 400));
  }
  static void TearDownTestSuite() { delete corpus_; }

  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lcgen_corpus_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  static Corpus* corpus_;
  fs::path dir_;
};

Corpus* CorpusTest::corpus_ = nullptr;

TEST(Median, MatchesSortedDefinition) {
  EXPECT_EQ(median({}), 0.0);
  EXPECT_EQ(median({5}), 5.0);
  EXPECT_EQ(median({3, 1, 2}), 2.0);
  EXPECT_EQ(median({4, 1, 3, 2}), 2.5);
  EXPECT_EQ(median({7, 7, 1, 9}), 7.0);
}

TEST_F(CorpusTest, IdsUniqueSourcesAndStats) {
  const auto& c = *corpus_;
  ASSERT_EQ(c.records.size(), 400u);
  std::unordered_set<std::string> sources;
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    EXPECT_EQ(c.records[i].id, static_cast<std::int64_t>(i));
    EXPECT_TRUE(sources.insert(c.records[i].lc2_src).second);
  }
  const auto& s = c.stats;
  EXPECT_EQ(s.accepted, 400u);
  EXPECT_EQ(s.candidates, s.accepted + s.rejected_too_long + s.rejected_duplicate + s.rejected_generation);
  EXPECT_GT(s.acceptance_rate(), 0.01);
}

TEST_F(CorpusTest, RecordsSatisfyInvariantsAndAudit) {
  const RecordLimits limits = GenConfig{}.limits();
  for (const auto& r : corpus_->records) {
    ASSERT_TRUE(r.annotated.has_value());
    EXPECT_EQ(check(*r.annotated), r.ty);
    const auto problems = audit_record(r, limits);
    EXPECT_TRUE(problems.empty()) << problems.front();
    for (Lang l : {Lang::LC1, Lang::LC2}) {
      EXPECT_LE(r.step_count(l, Strategy::WHNF), r.step_count(l, Strategy::DNF));
      EXPECT_LE(r.source_length(l), 512u);
    }
    for (const Task& t : Task::all()) EXPECT_LE(r.target_length(t), 256u);
  }
}

TEST_F(CorpusTest, AuditCatchesTampering) {
  const RecordLimits limits = GenConfig{}.limits();
  ExampleRecord r = corpus_->records[7];
  r.annotated.reset();
  ASSERT_TRUE(audit_record(r, limits).empty());
  ExampleRecord bad_target = r;
  bad_target.target(Task{Lang::LC1, Strategy::DNF, Renaming::VR}) = "\\x0 -> x0 x0";
  EXPECT_FALSE(audit_record(bad_target, limits).empty());
  ExampleRecord bad_steps = r;
  bad_steps.steps[3] += 1;
  EXPECT_FALSE(audit_record(bad_steps, limits).empty());
  ExampleRecord bad_src = r;
  bad_src.lc2_src = "(";
  EXPECT_FALSE(audit_record(bad_src, limits).empty());
  RecordLimits tight = limits;
  tight.max_input_tokens = 1;
  EXPECT_FALSE(audit_record(r, tight).empty());
}

TEST_F(CorpusTest, ParallelBuildMatchesSerial) {
  GenConfig cfg;
  cfg.seed = 2024;
  for (int workers : {1, 2, 8}) {
    const Corpus p = build_corpus(cfg, 400, workers);
    ASSERT_EQ(p.records.size(), corpus_->records.size());
    for (std::size_t i = 0; i < p.records.size(); ++i) {
      ASSERT_EQ(record_to_json(p.records[i]), record_to_json(corpus_->records[i])) << "workers " << workers;
    }
    EXPECT_EQ(p.stats.candidates, corpus_->stats.candidates);
  }
}

TEST_F(CorpusTest, SeedChangesCorpus) {
  GenConfig cfg;
  cfg.seed = 2025;
  const Corpus other = build_corpus(cfg, 50, 1);
  int same = 0;
  for (std::size_t i = 0; i < 50; ++i) same += other.records[i].lc2_src == corpus_->records[i].lc2_src;
  EXPECT_LT(same, 50);
}

TEST_F(CorpusTest, WriteReadIsByteStable) {
  const fs::path a = dir_ / "a.jsonl";
  const fs::path b = dir_ / "b.jsonl";
  write_corpus(a.string(), corpus_->records);
  const auto back = read_corpus(a.string());
  ASSERT_EQ(back.size(), corpus_->records.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back[i], corpus_->records[i]);
  write_corpus(b.string(), back);
  const std::string text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(text.find("\n\n"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "a.jsonl.tmp"));
}

TEST_F(CorpusTest, FieldOrderFollowsSchema) {
  const std::string line = record_to_json(corpus_->records[0]);
  std::size_t pos = 0;
  for (const auto& name : record_field_names()) {
    const std::size_t at = line.find("\"" + name + "\":", pos);
    ASSERT_NE(at, std::string::npos) << name;
    pos = at;
  }
  EXPECT_EQ(record_field_names().size(), 4u + 8u + 4u + 10u);
}

TEST_F(CorpusTest, ReadRejectsBadFiles) {
  const fs::path p = dir_ / "bad.jsonl";
  const std::string r0 = record_to_json(corpus_->records[0]);
  const std::string r1 = record_to_json(corpus_->records[1]);
  auto expect_bad = [&](const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
    EXPECT_THROW(read_corpus(p.string()), std::runtime_error) << text.substr(0, 40);
  };
  expect_bad(r1 + "\n" + r0 + "\n");  // descending ids
  expect_bad(r0 + "\n\n" + r1 + "\n");
  expect_bad("{\"id\": 3}\n");
  expect_bad("not json\n");
  EXPECT_THROW(read_corpus((dir_ / "missing.jsonl").string()), std::runtime_error);
}

TEST_F(CorpusTest, StatsFiles) {
  const std::string prefix = (dir_ / "stats").string();
  const CorpusSummary s = summarize(corpus_->records);
  write_stats(prefix, s, &corpus_->stats);
  const std::string kv = slurp(prefix + ".txt");
  for (const char* key : {"records = 400", "acceptance_rate = ", "median_steps_whnf_lc1 = ",
                          "median_steps_dnf_lc2 = ", "mean_len_lc1_src = "}) {
    EXPECT_NE(kv.find(key), std::string::npos) << key;
  }
  EXPECT_EQ(slurp(prefix + ".types.csv").substr(0, 11), "type,count\n");
  EXPECT_NE(slurp(prefix + ".steps.csv").find("steps_dnf_lc1,"), std::string::npos);
  EXPECT_NE(slurp(prefix + ".lengths.csv").find("len_lc2_dnf_nvr,"), std::string::npos);
  std::size_t total = 0;
  for (const auto& [ty, n] : s.types) total += n;
  EXPECT_EQ(total, 400u);
  std::vector<std::size_t> w;
  for (const auto& r : corpus_->records) w.push_back(r.steps[0]);
  std::sort(w.begin(), w.end());
  EXPECT_EQ(s.step_medians[0], (static_cast<double>(w[199]) + static_cast<double>(w[200])) / 2);
}

TEST(Guard, LowAcceptanceAborts) {
  GenConfig cfg;
  cfg.max_input_tokens = 1;  // nothing fits
  EXPECT_THROW(build_corpus_serial(cfg, 10), LowAcceptance);
  EXPECT_THROW(build_corpus(cfg, 10, 2), LowAcceptance);
  EXPECT_THROW(build_corpus_serial(GenConfig{}, 0), std::invalid_argument);
}

}  // namespace
}  // namespace lc
