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

#include <stdexcept>
#include <string>

#include "lc/syntax.hpp"

namespace lc {

namespace {

bool is_list_literal(const Term& t) {
  const Term* cur = &t;
  while (cur->is(TermKind::Cons)) cur = &cur->tail();
  return cur->is(TermKind::Nil) && t.is(TermKind::Cons);
}

bool is_atom(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Unit:
    case TermKind::True:
    case TermKind::False:
    case TermKind::Nil:
      return true;
    case TermKind::Cons:
      return is_list_literal(t);
    default:
      return false;
  }
}

class Printer {
 public:
  std::string take() { return std::move(out_); }

  void top(const Term& t) {
    if (t.is(TermKind::Lam)) {
      out_ += '\\';
      name(t.name());
      out_ += " -> ";
      top(t.body());
    } else if (is_atom(t)) {
      atom(t);
    } else {
      spine(t);
    }
  }

 private:
  void spine(const Term& t) {
    switch (t.kind()) {
      case TermKind::App:
        fun(t.fun());
        out_ += ' ';
        arg(t.arg());
        break;
      case TermKind::Ite:
        out_ += "ite";
        args(t);
        break;
      case TermKind::Foldr:
        out_ += "foldr";
        args(t);
        break;
      case TermKind::Cons:
        out_ += "(:)";
        args(t);
        break;
      default:
        atom(t);
    }
  }

  void args(const Term& t) {
    for (std::size_t i = 0; i < t.arity(); ++i) {
      out_ += ' ';
      arg(t.child(i));
    }
  }

  void fun(const Term& t) {
    if (t.is(TermKind::Lam)) {
      paren(t);
    } else if (is_atom(t)) {
      atom(t);
    } else {
      spine(t);
    }
  }

  void arg(const Term& t) {
    if (is_atom(t)) {
      atom(t);
    } else {
      paren(t);
    }
  }

  void paren(const Term& t) {
    out_ += '(';
    top(t);
    out_ += ')';
  }

  void atom(const Term& t) {
    switch (t.kind()) {
      case TermKind::Var:
        name(t.name());
        break;
      case TermKind::Unit:
        out_ += "()";
        break;
      case TermKind::True:
        out_ += "True";
        break;
      case TermKind::False:
        out_ += "False";
        break;
      case TermKind::Nil:
        out_ += "[]";
        break;
      case TermKind::Cons: {
        out_ += '[';
        const Term* cur = &t;
        bool first = true;
        while (cur->is(TermKind::Cons)) {
          if (!first) out_ += ", ";
          first = false;
          top(cur->head());
          cur = &cur->tail();
        }
        out_ += ']';
        break;
      }
      default:
        paren(t);
    }
  }

  void name(VarName v) {
    out_ += 'x';
    out_ += std::to_string(v.index);
  }

  std::string out_;
};

}  // namespace

std::string print1(const Term& t) {
  if (!t.is_lc1()) throw std::invalid_argument("print1: term is outside the untyped calculus");
  return print2(t);
}

std::string print2(const Term& t) {
  Printer p;
  p.top(t);
  return p.take();
}

std::string print(const Term& t, Lang lang) {
  return lang == Lang::LC1 ? print1(t) : print2(t);
}

}  // namespace lc
