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

#ifndef LC_TYPECHECK_HPP_
#define LC_TYPECHECK_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lc/term.hpp"
#include "lc/types.hpp"

namespace lc {

using TypeEnv = std::map<VarName, Type>;

class TypeError : public std::runtime_error {
 public:
  // `path` lists child indices from the root to the offending subterm.
  TypeError(std::vector<std::size_t> path, const std::string& message, Type expected = {},
            Type actual = {});

  const std::vector<std::size_t>& path() const { return path_; }
  const Type& expected() const { return expected_; }
  const Type& actual() const { return actual_; }

 private:
  std::vector<std::size_t> path_;
  Type expected_;
  Type actual_;
};

// Simply-typed checking of an annotated sugared term. Every Lam binder and
// Nil must carry a known annotation.
Type check(const TypeEnv& env, const Term& t);
inline Type check(const Term& t) { return check(TypeEnv{}, t); }

// Distinct types by descending count; ties broken by the Type total order.
std::vector<std::pair<Type, std::size_t>> type_frequency_order(std::span<const Type> types);

}  // namespace lc

#endif  // LC_TYPECHECK_HPP_
