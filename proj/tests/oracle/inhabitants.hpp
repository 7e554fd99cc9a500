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

#ifndef LC_TESTS_ORACLE_INHABITANTS_HPP_
#define LC_TESTS_ORACLE_INHABITANTS_HPP_

// Brute-force enumeration of every typed term of a goal type within a depth
// bound, written from the typing rules alone. A leaf has depth 1.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lc/reduce.hpp"
#include "lc/syntax.hpp"
#include "lc/term.hpp"
#include "lc/types.hpp"

namespace lc::oracle {

// All types of depth <= d.
inline std::vector<Type> all_types(int d) {
  std::vector<Type> out;
  if (d < 1) return out;
  out.push_back(Type::unit());
  out.push_back(Type::boolean());
  if (d == 1) return out;
  const auto smaller = all_types(d - 1);
  for (const auto& t : smaller) out.push_back(Type::list(t));
  for (const auto& a : smaller) {
    for (const auto& b : smaller) out.push_back(Type::arrow(a, b));
  }
  return out;
}

class Inhabitants {
 public:
  // `aux_types`: candidate argument/element types for App and Foldr.
  explicit Inhabitants(std::vector<Type> aux_types) : aux_(std::move(aux_types)) {}

  // Canonical printings (binders renumbered in preorder) of every term.
  std::set<std::string> of(const Type& ty, int depth) {
    std::set<std::string> out;
    for (const auto& t : go(ty, depth)) out.insert(print2(rename_vr(t)));
    return out;
  }

 private:
  std::vector<Term> go(const Type& ty, int depth) {
    std::vector<Term> out;
    if (depth < 1) return out;
    for (const auto& [name, t] : env_) {
      if (t == ty) out.push_back(Term::var(name));
    }
    switch (ty.kind()) {
      case TypeKind::Unit:
        out.push_back(Term::unit());
        break;
      case TypeKind::Bool:
        out.push_back(Term::tru());
        out.push_back(Term::fls());
        break;
      case TypeKind::List:
        out.push_back(Term::nil(ty.elem()));
        for (const auto& h : go(ty.elem(), depth - 1)) {
          for (const auto& tl : go(ty, depth - 1)) out.push_back(Term::cons(h, tl));
        }
        break;
      case TypeKind::Arrow: {
        const VarName x{next_++};
        env_.emplace_back(x, ty.dom());
        for (const auto& b : go(ty.cod(), depth - 1)) out.push_back(Term::lam(x, b, ty.dom()));
        env_.pop_back();
        break;
      }
    }
    for (const auto& c : go(Type::boolean(), depth - 1)) {
      const auto branches = go(ty, depth - 1);
      for (const auto& a : branches) {
        for (const auto& b : branches) out.push_back(Term::ite(c, a, b));
      }
    }
    for (const auto& a : aux_) {
      const auto args = go(a, depth - 1);
      if (args.empty()) continue;
      for (const auto& f : go(Type::arrow(a, ty), depth - 1)) {
        for (const auto& x : args) out.push_back(Term::app(f, x));
      }
    }
    for (const auto& a : aux_) {
      const auto lists = go(Type::list(a), depth - 1);
      if (lists.empty()) continue;
      const auto inits = go(ty, depth - 1);
      for (const auto& f : go(Type::arrow(a, Type::arrow(ty, ty)), depth - 1)) {
        for (const auto& e : inits) {
          for (const auto& l : lists) out.push_back(Term::foldr(f, e, l));
        }
      }
    }
    return out;
  }

  std::vector<Type> aux_;
  std::vector<std::pair<VarName, Type>> env_;
  std::uint32_t next_ = 100;  // names are canonicalized afterwards
};

}  // namespace lc::oracle

#endif  // LC_TESTS_ORACLE_INHABITANTS_HPP_
