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

#include "lc/tokens.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace lc {

namespace {

constexpr std::string_view kWordStart = "\xE2\x96\x81";  // U+2581

}  // namespace

TokenCounter TokenCounter::from_vocab_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vocabulary file " + path);
  std::unordered_set<std::string> pieces;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string piece = line.substr(0, line.find('\t'));
    if (!piece.empty()) pieces.insert(piece);
  }
  if (pieces.empty()) throw std::runtime_error("vocabulary file " + path + " has no pieces");
  return from_vocab(std::move(pieces));
}

TokenCounter TokenCounter::from_vocab(std::unordered_set<std::string> pieces) {
  if (pieces.empty()) throw std::runtime_error("empty vocabulary");
  TokenCounter tc(TokenMode::Vocab);
  for (const auto& p : pieces) tc.longest_piece_ = std::max(tc.longest_piece_, p.size());
  tc.vocab_ = std::make_shared<const std::unordered_set<std::string>>(std::move(pieces));
  return tc;
}

std::size_t TokenCounter::count(std::string_view s) const {
  switch (mode_) {
    case TokenMode::Char:
      return s.size();
    case TokenMode::Whitespace:
    case TokenMode::Vocab: {
      std::size_t n = 0;
      std::size_t i = 0;
      while (i < s.size()) {
        while (i < s.size() && s[i] == ' ') ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ') ++j;
        if (j > i) n += mode_ == TokenMode::Whitespace ? 1 : count_word(s.substr(i, j - i));
        i = j;
      }
      return n;
    }
  }
  return 0;
}

std::size_t TokenCounter::count_word(std::string_view word) const {
  std::size_t n = 0;
  std::size_t i = 0;
  std::string probe;
  while (i < word.size()) {
    std::size_t best = 0;
    const std::size_t max_len = std::min(longest_piece_, word.size() - i);
    for (std::size_t len = max_len; len > 0 && best == 0; --len) {
      if (i == 0) {
        probe.assign(kWordStart);
        probe.append(word.substr(i, len));
        if (vocab_->contains(probe)) best = len;
      }
      if (best == 0) {
        probe.assign(word.substr(i, len));
        if (vocab_->contains(probe)) best = len;
      }
    }
    i += best == 0 ? 1 : best;
    ++n;
  }
  return n;
}

}  // namespace lc
