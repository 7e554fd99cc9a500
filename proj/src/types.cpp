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

#include "lc/types.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lc {

Type Type::unit() {
  static const Type t(std::make_shared<const detail::TypeNode>(detail::TypeNode{TypeKind::Unit, 1, {}, {}}));
  return t;
}

Type Type::boolean() {
  static const Type t(std::make_shared<const detail::TypeNode>(detail::TypeNode{TypeKind::Bool, 1, {}, {}}));
  return t;
}

Type Type::list(Type elem) {
  const int d = elem.depth() + 1;
  return Type(std::make_shared<const detail::TypeNode>(detail::TypeNode{TypeKind::List, d, std::move(elem), {}}));
}

Type Type::arrow(Type dom, Type cod) {
  const int d = std::max(dom.depth(), cod.depth()) + 1;
  return Type(std::make_shared<const detail::TypeNode>(
      detail::TypeNode{TypeKind::Arrow, d, std::move(dom), std::move(cod)}));
}

namespace {

void render(const Type& t, std::string& out) {
  if (!t.known()) {
    out += '?';
    return;
  }
  switch (t.kind()) {
    case TypeKind::Unit:
      out += "Unit";
      break;
    case TypeKind::Bool:
      out += "Bool";
      break;
    case TypeKind::List:
      out += '[';
      render(t.elem(), out);
      out += ']';
      break;
    case TypeKind::Arrow: {
      const bool paren = t.dom().known() && t.dom().kind() == TypeKind::Arrow;
      if (paren) out += '(';
      render(t.dom(), out);
      if (paren) out += ')';
      out += " -> ";
      render(t.cod(), out);
      break;
    }
  }
}

}  // namespace

std::string Type::str() const {
  std::string out;
  render(*this, out);
  return out;
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (!a.known() || !b.known()) return false;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TypeKind::Unit:
    case TypeKind::Bool:
      return true;
    case TypeKind::List:
      return a.elem() == b.elem();
    case TypeKind::Arrow:
      return a.dom() == b.dom() && a.cod() == b.cod();
  }
  return false;
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.known() || !b.known()) return a.known() <=> b.known();
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case TypeKind::Unit:
    case TypeKind::Bool:
      return std::strong_ordering::equal;
    case TypeKind::List:
      return a.elem() <=> b.elem();
    case TypeKind::Arrow:
      if (auto c = a.dom() <=> b.dom(); c != 0) return c;
      return a.cod() <=> b.cod();
  }
  return std::strong_ordering::equal;
}

std::size_t TypeHash::operator()(const Type& t) const {
  if (!t.known()) return 0x9e3779b9u;
  std::size_t h = static_cast<std::size_t>(t.kind()) + 1;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  switch (t.kind()) {
    case TypeKind::Unit:
    case TypeKind::Bool:
      break;
    case TypeKind::List:
      mix((*this)(t.elem()));
      break;
    case TypeKind::Arrow:
      mix((*this)(t.dom()));
      mix((*this)(t.cod()));
      break;
  }
  return h;
}

namespace {

class TypeParser {
 public:
  explicit TypeParser(std::string_view text) : text_(text) {}

  Type parse() {
    Type t = arrow();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  Type arrow() {
    Type dom = atom();
    skip_ws();
    if (text_.substr(pos_).starts_with("->")) {
      pos_ += 2;
      return Type::arrow(std::move(dom), arrow());
    }
    return dom;
  }

  Type atom() {
    skip_ws();
    if (text_.substr(pos_).starts_with("Unit")) {
      pos_ += 4;
      return Type::unit();
    }
    if (text_.substr(pos_).starts_with("Bool")) {
      pos_ += 4;
      return Type::boolean();
    }
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      Type elem = arrow();
      expect(']');
      return Type::list(std::move(elem));
    }
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      Type inner = arrow();
      expect(')');
      return inner;
    }
    fail("expected a type");
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("type syntax error at offset " + std::to_string(pos_) +
                                ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Type parse_type(std::string_view text) { return TypeParser(text).parse(); }

}  // namespace lc
