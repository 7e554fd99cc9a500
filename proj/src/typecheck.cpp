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

#include "lc/typecheck.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace lc {

namespace {

std::string describe(const std::vector<std::size_t>& path, const std::string& message,
                     const Type& expected, const Type& actual) {
  std::string out = "type error at [";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  out += "]: " + message;
  if (expected.known() || actual.known()) {
    out += " (expected " + expected.str() + ", got " + actual.str() + ")";
  }
  return out;
}

class Checker {
 public:
  explicit Checker(const TypeEnv& env) : env_(env) {}

  Type run(const Term& t) {
    switch (t.kind()) {
      case TermKind::Var: {
        auto it = env_.find(t.name());
        if (it == env_.end()) fail("unbound variable " + t.name().str());
        return it->second;
      }
      case TermKind::Lam: {
        if (!t.annotation().known()) fail("binder " + t.name().str() + " has no type annotation");
        auto saved = env_.find(t.name());
        std::optional<Type> shadowed;
        if (saved != env_.end()) shadowed = saved->second;
        env_[t.name()] = t.annotation();
        Type body = at(0, t.body());
        if (shadowed) {
          env_[t.name()] = *shadowed;
        } else {
          env_.erase(t.name());
        }
        return Type::arrow(t.annotation(), body);
      }
      case TermKind::App: {
        Type f = at(0, t.fun());
        if (f.kind() != TypeKind::Arrow) fail("applying a non-function", {}, f);
        Type a = at(1, t.arg());
        if (!(a == f.dom())) fail("argument type mismatch", f.dom(), a, 1);
        return f.cod();
      }
      case TermKind::Unit:
        return Type::unit();
      case TermKind::True:
      case TermKind::False:
        return Type::boolean();
      case TermKind::Ite: {
        Type c = at(0, t.cond());
        if (!(c == Type::boolean())) fail("condition is not Bool", Type::boolean(), c, 0);
        Type a = at(1, t.then_branch());
        Type b = at(2, t.else_branch());
        if (!(a == b)) fail("branches disagree", a, b, 2);
        return a;
      }
      case TermKind::Nil:
        if (!t.annotation().known()) fail("[] has no element type annotation");
        return Type::list(t.annotation());
      case TermKind::Cons: {
        Type h = at(0, t.head());
        Type tl = at(1, t.tail());
        if (!(tl == Type::list(h))) fail("tail does not match head", Type::list(h), tl, 1);
        return tl;
      }
      case TermKind::Foldr: {
        Type f = at(0, t.step_fn());
        Type e = at(1, t.init());
        Type l = at(2, t.list());
        if (l.kind() != TypeKind::List) fail("foldr over a non-list", {}, l, 2);
        Type want = Type::arrow(l.elem(), Type::arrow(e, e));
        if (!(f == want)) fail("foldr step function", want, f, 0);
        return e;
      }
    }
    fail("unknown term kind");
  }

 private:
  Type at(std::size_t i, const Term& child) {
    path_.push_back(i);
    Type r = run(child);
    path_.pop_back();
    return r;
  }

  [[noreturn]] void fail(const std::string& message, Type expected = {}, Type actual = {},
                         std::optional<std::size_t> child = std::nullopt) {
    auto p = path_;
    if (child) p.push_back(*child);
    throw TypeError(std::move(p), message, std::move(expected), std::move(actual));
  }

  TypeEnv env_;
  std::vector<std::size_t> path_;
};

}  // namespace

TypeError::TypeError(std::vector<std::size_t> path, const std::string& message, Type expected,
                     Type actual)
    : std::runtime_error(describe(path, message, expected, actual)),
      path_(std::move(path)),
      expected_(std::move(expected)),
      actual_(std::move(actual)) {}

Type check(const TypeEnv& env, const Term& t) { return Checker(env).run(t); }

std::vector<std::pair<Type, std::size_t>> type_frequency_order(std::span<const Type> types) {
  std::unordered_map<Type, std::size_t, TypeHash> counts;
  for (const Type& t : types) ++counts[t];
  std::vector<std::pair<Type, std::size_t>> out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

}  // namespace lc
