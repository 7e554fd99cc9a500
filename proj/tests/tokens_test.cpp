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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "lc/tokens.hpp"

namespace lc {
namespace {

TEST(Whitespace, CountsLexemes) {
  const auto tc = TokenCounter::whitespace();
  EXPECT_EQ(tc.count("\\x0 -> x0"), 3u);
  EXPECT_EQ(tc.count(""), 0u);
  EXPECT_EQ(tc.count("(\\x0 -> x0) (\\x1 -> x1)"), 6u);
  EXPECT_EQ(tc.count("  ()  "), 1u);
}

TEST(Char, CountsBytes) {
  const auto tc = TokenCounter::chars();
  EXPECT_EQ(tc.count("\\x0 -> x0"), 9u);
  EXPECT_EQ(tc.count(""), 0u);
}

const std::unordered_set<std::string> kPieces{"\xE2\x96\x81(", "\\", "x", "0", "1", "\xE2\x96\x81->",
                                              "\xE2\x96\x81x", ")", "x0"};

TEST(Vocab, GreedyLongestMatch) {
  const auto tc = TokenCounter::from_vocab(kPieces);
  // "(\x0" -> [_(] [\] [x0]; "->" -> [_->]; "x0)" -> [x0] [)]
  EXPECT_EQ(tc.count("(\\x0 -> x0)"), 6u);
  // the word-start piece wins only where it is longest: "x1" -> [_x] [1]
  EXPECT_EQ(tc.count("x1"), 2u);
  EXPECT_EQ(tc.count("(\\x1"), 4u);
  // bytes outside the vocabulary count one each
  EXPECT_EQ(tc.count("@@"), 2u);
  EXPECT_EQ(tc.count(""), 0u);
  EXPECT_GE(tc.count("y"), 1u);
}

TEST(Vocab, FileLoading) {
  const auto path = std::filesystem::temp_directory_path() / "lcgen_vocab_test.txt";
  {
    std::ofstream out(path);
    for (const auto& p : kPieces) out << p << "\t-1.5\n";
  }
  const auto tc = TokenCounter::from_vocab_file(path.string());
  EXPECT_EQ(tc.mode(), TokenMode::Vocab);
  EXPECT_EQ(tc.count("(\\x0 -> x0)"), 6u);
  std::filesystem::remove(path);
  EXPECT_THROW(TokenCounter::from_vocab_file("/nonexistent/vocab"), std::runtime_error);
  EXPECT_THROW(TokenCounter::from_vocab({}), std::runtime_error);
}

}  // namespace
}  // namespace lc
