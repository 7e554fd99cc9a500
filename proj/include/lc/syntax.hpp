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

#ifndef LC_SYNTAX_HPP_
#define LC_SYNTAX_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lc/term.hpp"

namespace lc {

enum class Lang { LC1, LC2 };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Surface syntax:
//
//   \x0 -> e          lambda, body extends as far right as possible
//   e1 e2             application, left associative
//   () True False []  literals
//   [e1, e2]          nil-terminated list
//   (:) e1 e2, e1 : e2
//   ite c t e, foldr f z l
//
// The LC1 parser accepts only variables, lambdas and applications.
Term parse1(std::string_view text);
Term parse2(std::string_view text);
Term parse(std::string_view text, Lang lang);

// Canonical rendering. Non-nil-terminated cons cells print prefix-style as
// `(:) h t`; `e1 : e2` is accepted on input only.
std::string print1(const Term& t);
std::string print2(const Term& t);
std::string print(const Term& t, Lang lang);

}  // namespace lc

#endif  // LC_SYNTAX_HPP_
