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

#ifndef LC_TYPES_HPP_
#define LC_TYPES_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace lc {

enum class TypeKind : unsigned char { Unit, Bool, List, Arrow };

namespace detail {
struct TypeNode;
}

// Simple type of the sugared calculus. A default-constructed Type is the
// "unknown" annotation that the parser attaches to binders; it is not a
// member of the type language and check() rejects it.
class Type {
 public:
  Type() = default;

  static Type unit();
  static Type boolean();
  static Type list(Type elem);
  static Type arrow(Type dom, Type cod);

  bool known() const { return node_ != nullptr; }
  TypeKind kind() const;

  // Valid for List.
  const Type& elem() const;
  // Valid for Arrow.
  const Type& dom() const;
  const Type& cod() const;

  // Unit and Bool have depth 1; List and Arrow add one to their deepest child.
  int depth() const;

  // `Unit`, `Bool`, `[t]`, `a -> b` with right-associative arrows.
  std::string str() const;

  friend bool operator==(const Type& a, const Type& b);
  // Total order: unknown < Unit < Bool < List < Arrow, children compared
  // lexicographically.
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  explicit Type(std::shared_ptr<const detail::TypeNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::TypeNode> node_;
};

namespace detail {

struct TypeNode {
  TypeKind kind;
  int depth;
  Type first;
  Type second;
};

}  // namespace detail

inline TypeKind Type::kind() const { return node_->kind; }
inline const Type& Type::elem() const { return node_->first; }
inline const Type& Type::dom() const { return node_->first; }
inline const Type& Type::cod() const { return node_->second; }
inline int Type::depth() const { return node_->depth; }

// Inverse of Type::str(). Throws std::invalid_argument on malformed input.
Type parse_type(std::string_view text);

struct TypeHash {
  std::size_t operator()(const Type& t) const;
};

}  // namespace lc

#endif  // LC_TYPES_HPP_
