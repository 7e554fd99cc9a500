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

#include <sstream>

#include "lc/corpus.hpp"
#include "lc/metrics.hpp"

namespace lc {
namespace {

const Task kTask{Lang::LC1, Strategy::DNF, Renaming::VR};

ExampleRecord gold(std::int64_t id, const std::string& target) {
  ExampleRecord r;
  r.id = id;
  r.target(kTask) = target;
  return r;
}

std::vector<const ExampleRecord*> ptrs(const std::vector<ExampleRecord>& v) {
  std::vector<const ExampleRecord*> out;
  for (const auto& r : v) out.push_back(&r);
  return out;
}

Predictions parse(const std::string& text) {
  std::istringstream in(text);
  return parse_predictions(in);
}

TEST(ExactMatch, ThreeOfFour) {
  const std::vector<ExampleRecord> g{gold(0, "\\x0 -> x0"), gold(1, "\\x0 -> \\x1 -> x0"), gold(2, "x0"),
                                     gold(3, "\\x0 -> x0 x0")};
  const auto p = parse("0\t\\x0 -> x0\n1\t\\x0 -> \\x1 -> x0\n2\tx0\n3\t\\x0 -> x0\n");
  const auto r = exact_match(p, ptrs(g), kTask);
  EXPECT_EQ(r.total, 4u);
  EXPECT_EQ(r.matches, 3u);
  EXPECT_DOUBLE_EQ(r.score(), 0.75);
  EXPECT_FALSE(r.verdicts[3].match);
  EXPECT_FALSE(r.verdicts[3].alpha_equal);
}

TEST(ExactMatch, GoldAgainstItselfScoresOne) {
  GenConfig cfg;
  cfg.seed = 11;
  const auto c = build_corpus_serial(cfg, 300).records;
  for (const Task& t : Task::all()) {
    Predictions p;
    for (const auto& r : c) p[r.id] = r.target(t);
    EXPECT_DOUBLE_EQ(exact_match(p, ptrs(c), t).score(), 1.0) << t.str();
  }
}

TEST(ExactMatch, AlphaEquivalentIsStillAMismatch) {
  const std::vector<ExampleRecord> g{gold(0, "\\x0 -> x0"), gold(1, "\\x0 -> \\x1 -> x1")};
  const auto p = parse("0\t\\x1 -> x1\n1\t\\x0 -> \\x1 -> x0\n");
  const auto r = exact_match(p, ptrs(g), kTask);
  EXPECT_EQ(r.matches, 0u);
  EXPECT_EQ(r.alpha_equal_mismatches, 1u);
  EXPECT_TRUE(r.verdicts[0].alpha_equal);
  EXPECT_FALSE(r.verdicts[1].alpha_equal);
  EXPECT_DOUBLE_EQ(r.alpha_share(), 0.5);
}

TEST(ExactMatch, MissingAndUnknownIds) {
  const std::vector<ExampleRecord> g{gold(0, "x0"), gold(1, "x1")};
  const auto r = exact_match(parse("1\tx1\n"), ptrs(g), kTask);
  EXPECT_EQ(r.matches, 1u);
  EXPECT_FALSE(r.verdicts[0].predicted);
  const auto empty = exact_match(Predictions{}, ptrs(g), kTask);
  EXPECT_EQ(empty.matches, 0u);
  EXPECT_DOUBLE_EQ(empty.score(), 0.0);
  EXPECT_THROW(exact_match(parse("5\tx0\n"), ptrs(g), kTask), std::runtime_error);
  EXPECT_DOUBLE_EQ(exact_match(Predictions{}, {}, kTask).score(), 0.0);
}

TEST(Predictions, ParsingRules) {
  EXPECT_THROW(parse("1\ta\n1\tb\n"), std::runtime_error);
  EXPECT_THROW(parse("x\ta\n"), std::runtime_error);
  EXPECT_THROW(parse("1x\ta\n"), std::runtime_error);
  const auto p = parse("7\n8\t\\x0 -> x0\t?\n");
  EXPECT_EQ(p.at(7), "");
  EXPECT_EQ(p.at(8), "\\x0 -> x0\t?");  // only the first tab separates
  EXPECT_THROW(read_predictions("/nonexistent/preds.tsv"), std::runtime_error);
}

TEST(Predictions, TrailingNewlineIsIgnored) {
  EXPECT_TRUE(strings_match("x0\n", "x0"));
  EXPECT_TRUE(strings_match("x0\r\n", "x0"));
  EXPECT_TRUE(strings_match("x0", "x0\n"));
  EXPECT_FALSE(strings_match("x0\n\n", "x0"));
  EXPECT_FALSE(strings_match("x0 ", "x0"));
  EXPECT_FALSE(strings_match(" x0", "x0"));
  const std::vector<ExampleRecord> g{gold(0, "x0")};
  EXPECT_EQ(exact_match(parse("0\tx0\r\n"), ptrs(g), kTask).matches, 1u);
}

TEST(Buckets, EqualSizesAndNondecreasingMeans) {
  std::vector<std::size_t> lengths;
  std::vector<bool> hits;
  for (std::size_t i = 0; i < 1000; ++i) {
    lengths.push_back((i * 7919) % 257);
    hits.push_back(i % 3 == 0);
  }
  const auto b = length_buckets(lengths, hits, 10);
  ASSERT_EQ(b.size(), 10u);
  double prev = -1;
  std::size_t total_hits = 0;
  for (const auto& x : b) {
    EXPECT_EQ(x.rows, 100u);
    EXPECT_GE(x.mean_length, prev);
    prev = x.mean_length;
    total_hits += static_cast<std::size_t>(x.exact_match * 100 + 0.5);
  }
  EXPECT_EQ(total_hits, 334u);
}

TEST(Buckets, UnevenSizesAndErrors) {
  const auto b = length_buckets({5, 1, 4, 2, 3, 6, 7}, {true, false, true, false, true, false, true}, 3);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0].rows, 3u);
  EXPECT_EQ(b[1].rows, 2u);
  EXPECT_EQ(b[2].rows, 2u);
  EXPECT_DOUBLE_EQ(b[0].mean_length, 2.0);  // 1, 2, 3
  EXPECT_DOUBLE_EQ(b[0].exact_match, 1.0 / 3);
  EXPECT_DOUBLE_EQ(b[2].mean_length, 6.5);
  EXPECT_THROW(length_buckets({1}, {true}, 1), std::invalid_argument);
  EXPECT_THROW(length_buckets({1, 2}, {true}, 2), std::invalid_argument);
}

TEST(Report, TableLayout) {
  TaskScore s;
  s.task = Task{Lang::LC2, Strategy::WHNF, Renaming::NVR};
  s.result.total = 4;
  s.result.matches = 3;
  const std::string text = format_report({s}, "random");
  EXPECT_NE(text.find("random"), std::string::npos);
  EXPECT_NE(text.find("VR LC1"), std::string::npos);
  EXPECT_NE(text.find("NVR LC2"), std::string::npos);
  EXPECT_NE(text.find("0.750"), std::string::npos);
  EXPECT_NE(text.find("-"), std::string::npos);
  const std::string csv = format_buckets_csv({Bucket{3, 2.0, 0.5}});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "mean_length,exact_match,rows");
}

TEST(TestRecords, ResolvesIdsAndInlineRecords) {
  std::vector<ExampleRecord> c{gold(0, "a"), gold(1, "b"), gold(2, "c")};
  SplitManifest m;
  m.train_ids = {0};
  m.test_ids = {2, 1};
  const auto t = test_records(m, c, Lang::LC1);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0]->id, 2);
  m.test_ids = {9};
  EXPECT_THROW(test_records(m, c, Lang::LC1), std::runtime_error);
  m.kind = SplitKind::Composition;
  m.composed.push_back({gold(3, "d"), 0, 1});
  EXPECT_EQ(test_records(m, c, Lang::LC2).at(0)->id, 3);
}

}  // namespace
}  // namespace lc
