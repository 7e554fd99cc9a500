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

#ifndef LC_TERM_HPP_
#define LC_TERM_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lc/types.hpp"

namespace lc {

// Variable `x<index>`.
struct VarName {
  std::uint32_t index = 0;

  std::string str() const { return "x" + std::to_string(index); }
  friend auto operator<=>(const VarName&, const VarName&) = default;
};

enum class TermKind : unsigned char { Var, Lam, App, Unit, True, False, Ite, Nil, Cons, Foldr };

// Immutable, structurally shared term of either calculus. The untyped
// calculus is the Var/Lam/App fragment; is_lc1() reports membership.
//
// Lam binders and Nil carry a type annotation that never reaches the surface
// syntax. Parsed terms carry unknown annotations.
namespace detail {
struct TermNode;
}

class Term {
 public:
  // Empty handle; only valid as a placeholder to be assigned over.
  Term() = default;

  static Term var(VarName name);
  static Term lam(VarName binder, Term body, Type binder_type = {});
  static Term app(Term fun, Term arg);
  static Term unit();
  static Term tru();
  static Term fls();
  static Term ite(Term cond, Term then_branch, Term else_branch);
  static Term nil(Type elem_type = {});
  static Term cons(Term head, Term tail);
  static Term foldr(Term step, Term init, Term list);

  // Left-nested application `f a1 a2 ...`.
  static Term apply(Term f, std::span<const Term> args);

  TermKind kind() const;
  bool is(TermKind k) const { return kind() == k; }

  // Var / Lam.
  VarName name() const;
  // Lam binder type or Nil element type.
  const Type& annotation() const;

  const Term& body() const { return child(0); }
  const Term& fun() const { return child(0); }
  const Term& arg() const { return child(1); }
  const Term& cond() const { return child(0); }
  const Term& then_branch() const { return child(1); }
  const Term& else_branch() const { return child(2); }
  const Term& head() const { return child(0); }
  const Term& tail() const { return child(1); }
  const Term& step_fn() const { return child(0); }
  const Term& init() const { return child(1); }
  const Term& list() const { return child(2); }

  const Term& child(std::size_t i) const;
  std::size_t arity() const;

  // Largest variable index occurring anywhere (binders included), or -1.
  std::int64_t max_index() const;
  // Number of AST nodes.
  std::size_t size() const;
  // Sorted free variable indices.
  std::span<const std::uint32_t> free_indices() const;
  bool has_free(VarName v) const;
  bool closed() const { return free_indices().empty(); }
  bool is_lc1() const;

  // Same node object; cheap pre-check for structural equality.
  bool same(const Term& other) const { return node_ == other.node_; }

  // Structural equality including binder names, ignoring annotations.
  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> n) : node_(std::move(n)) {}
  static Term make(TermKind kind, std::initializer_list<Term> children, VarName name = {},
                   Type annotation = {});

  std::shared_ptr<const detail::TermNode> node_;
};

namespace detail {

struct TermNode {
  TermKind kind;
  unsigned char arity = 0;
  bool lc1 = true;
  VarName name{};
  Type annotation;
  std::array<Term, 3> children;
  std::int64_t max_index = -1;
  std::size_t size = 1;
  std::vector<std::uint32_t> free;
};

}  // namespace detail

inline TermKind Term::kind() const { return node_->kind; }
inline VarName Term::name() const { return node_->name; }
inline const Type& Term::annotation() const { return node_->annotation; }
inline const Term& Term::child(std::size_t i) const { return node_->children[i]; }
inline std::size_t Term::arity() const { return node_->arity; }
inline std::int64_t Term::max_index() const { return node_->max_index; }
inline std::size_t Term::size() const { return node_->size; }
inline std::span<const std::uint32_t> Term::free_indices() const { return node_->free; }
inline bool Term::is_lc1() const { return node_->lc1; }

// Free variables of t, ascending.
std::vector<VarName> free_vars(const Term& t);

// Capture-avoiding t[v := s]. A binder that would capture a free variable of
// s is renamed to a fresh index strictly above every index in t and s.
Term substitute(const Term& t, VarName v, const Term& s);

// Equality up to consistent renaming of bound variables. Free variables must
// match by name.
bool alpha_eq(const Term& a, const Term& b);

}  // namespace lc

#endif  // LC_TERM_HPP_
