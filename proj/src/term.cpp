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

#include "lc/term.hpp"

#include <algorithm>
#include <iterator>

namespace lc {

namespace {

std::vector<std::uint32_t> merge_free(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<std::uint32_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Term Term::make(TermKind kind, std::initializer_list<Term> children, VarName name,
                Type annotation) {
  auto n = std::make_shared<detail::TermNode>();
  n->kind = kind;
  n->name = name;
  n->annotation = std::move(annotation);
  n->arity = static_cast<unsigned char>(children.size());
  n->lc1 = kind == TermKind::Var || kind == TermKind::Lam || kind == TermKind::App;
  std::size_t i = 0;
  for (const Term& c : children) {
    n->children[i++] = c;
    n->size += c.size();
    n->max_index = std::max(n->max_index, c.max_index());
    n->lc1 = n->lc1 && c.is_lc1();
    n->free = merge_free(n->free, c.node_->free);
  }
  if (kind == TermKind::Var || kind == TermKind::Lam) {
    n->max_index = std::max<std::int64_t>(n->max_index, name.index);
  }
  if (kind == TermKind::Var) n->free.push_back(name.index);
  if (kind == TermKind::Lam) {
    auto it = std::lower_bound(n->free.begin(), n->free.end(), name.index);
    if (it != n->free.end() && *it == name.index) n->free.erase(it);
  }
  return Term(std::move(n));
}

Term Term::var(VarName name) { return make(TermKind::Var, {}, name); }

Term Term::lam(VarName binder, Term body, Type binder_type) {
  return make(TermKind::Lam, {std::move(body)}, binder, std::move(binder_type));
}

Term Term::app(Term fun, Term arg) { return make(TermKind::App, {std::move(fun), std::move(arg)}); }

Term Term::unit() {
  static const Term t = make(TermKind::Unit, {});
  return t;
}

Term Term::tru() {
  static const Term t = make(TermKind::True, {});
  return t;
}

Term Term::fls() {
  static const Term t = make(TermKind::False, {});
  return t;
}

Term Term::ite(Term cond, Term then_branch, Term else_branch) {
  return make(TermKind::Ite, {std::move(cond), std::move(then_branch), std::move(else_branch)});
}

Term Term::nil(Type elem_type) { return make(TermKind::Nil, {}, {}, std::move(elem_type)); }

Term Term::cons(Term head, Term tail) {
  return make(TermKind::Cons, {std::move(head), std::move(tail)});
}

Term Term::foldr(Term step, Term init, Term list) {
  return make(TermKind::Foldr, {std::move(step), std::move(init), std::move(list)});
}

Term Term::apply(Term f, std::span<const Term> args) {
  for (const Term& a : args) f = app(std::move(f), a);
  return f;
}

bool Term::has_free(VarName v) const {
  return std::binary_search(node_->free.begin(), node_->free.end(), v.index);
}

bool operator==(const Term& a, const Term& b) {
  if (a.same(b)) return true;
  if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
  if ((a.is(TermKind::Var) || a.is(TermKind::Lam)) && a.name() != b.name()) return false;
  if (a.size() != b.size() || a.max_index() != b.max_index()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

std::vector<VarName> free_vars(const Term& t) {
  std::vector<VarName> out;
  out.reserve(t.free_indices().size());
  for (std::uint32_t i : t.free_indices()) out.push_back(VarName{i});
  return out;
}

namespace {

Term rebuild(const Term& t, std::array<Term, 3>& kids) {
  switch (t.kind()) {
    case TermKind::Lam:
      return Term::lam(t.name(), kids[0], t.annotation());
    case TermKind::App:
      return Term::app(kids[0], kids[1]);
    case TermKind::Ite:
      return Term::ite(kids[0], kids[1], kids[2]);
    case TermKind::Cons:
      return Term::cons(kids[0], kids[1]);
    case TermKind::Foldr:
      return Term::foldr(kids[0], kids[1], kids[2]);
    default:
      return t;
  }
}

class Substituter {
 public:
  Substituter(VarName v, const Term& s, std::uint32_t& next_fresh)
      : v_(v), s_(s), next_fresh_(next_fresh) {}

  Term run(const Term& t) {
    if (!t.has_free(v_)) return t;
    switch (t.kind()) {
      case TermKind::Var:
        return s_;
      case TermKind::Lam: {
        if (s_.has_free(t.name())) {
          const VarName fresh{next_fresh_++};
          // fresh occurs nowhere in the body, so this inner pass never renames.
          Substituter rename(t.name(), Term::var(fresh), next_fresh_);
          return Term::lam(fresh, run(rename.run(t.body())), t.annotation());
        }
        return Term::lam(t.name(), run(t.body()), t.annotation());
      }
      default: {
        std::array<Term, 3> kids;
        for (std::size_t i = 0; i < t.arity(); ++i) kids[i] = run(t.child(i));
        return rebuild(t, kids);
      }
    }
  }

 private:
  VarName v_;
  Term s_;  // by value: the renaming pass is built from a temporary
  std::uint32_t& next_fresh_;
};

bool alpha_rec(const Term& a, const Term& b, std::vector<std::uint32_t>& sa,
               std::vector<std::uint32_t>& sb) {
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case TermKind::Var: {
      auto ia = std::find(sa.rbegin(), sa.rend(), a.name().index);
      auto ib = std::find(sb.rbegin(), sb.rend(), b.name().index);
      const bool fa = ia == sa.rend();
      const bool fb = ib == sb.rend();
      if (fa || fb) return fa && fb && a.name() == b.name();
      return (ia - sa.rbegin()) == (ib - sb.rbegin());
    }
    case TermKind::Lam: {
      sa.push_back(a.name().index);
      sb.push_back(b.name().index);
      const bool eq = alpha_rec(a.body(), b.body(), sa, sb);
      sa.pop_back();
      sb.pop_back();
      return eq;
    }
    default:
      for (std::size_t i = 0; i < a.arity(); ++i) {
        if (!alpha_rec(a.child(i), b.child(i), sa, sb)) return false;
      }
      return true;
  }
}

}  // namespace

Term substitute(const Term& t, VarName v, const Term& s) {
  std::uint32_t next_fresh =
      static_cast<std::uint32_t>(std::max(t.max_index(), s.max_index()) + 1);
  Substituter sub(v, s, next_fresh);
  return sub.run(t);
}

bool alpha_eq(const Term& a, const Term& b) {
  std::vector<std::uint32_t> sa;
  std::vector<std::uint32_t> sb;
  return alpha_rec(a, b, sa, sb);
}

}  // namespace lc
