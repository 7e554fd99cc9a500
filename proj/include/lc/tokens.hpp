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

#ifndef LC_TOKENS_HPP_
#define LC_TOKENS_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>

namespace lc {

enum class TokenMode { Whitespace, Char, Vocab };

// Token length of printed terms.
//
//   Whitespace  space-separated lexemes of the canonical printing
//   Char        bytes
//   Vocab       greedy longest match against a subword vocabulary, one piece
//               per line (extra tab-separated columns ignored). Word-initial
//               pieces may carry the U+2581 marker; unmatched bytes count as
//               one token each.
class TokenCounter {
 public:
  TokenCounter() = default;
  static TokenCounter whitespace() { return TokenCounter(TokenMode::Whitespace); }
  static TokenCounter chars() { return TokenCounter(TokenMode::Char); }
  // Throws std::runtime_error when the file is missing or has no pieces.
  static TokenCounter from_vocab_file(const std::string& path);
  static TokenCounter from_vocab(std::unordered_set<std::string> pieces);

  TokenMode mode() const { return mode_; }
  std::size_t count(std::string_view s) const;

 private:
  explicit TokenCounter(TokenMode mode) : mode_(mode) {}
  std::size_t count_word(std::string_view word) const;

  TokenMode mode_ = TokenMode::Whitespace;
  std::shared_ptr<const std::unordered_set<std::string>> vocab_;
  std::size_t longest_piece_ = 0;
};

}  // namespace lc

#endif  // LC_TOKENS_HPP_
