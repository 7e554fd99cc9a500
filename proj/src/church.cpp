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

#include "lc/church.hpp"

#include <array>

#include "lc/reduce.hpp"

namespace lc {

namespace {

class Encoder {
 public:
  explicit Encoder(std::uint32_t first_fresh) : next_(first_fresh) {}

  Term run(const Term& t) {
    switch (t.kind()) {
      case TermKind::Var:
        return t;
      case TermKind::Lam:
        return Term::lam(t.name(), run(t.body()));
      case TermKind::App:
        return Term::app(run(t.fun()), run(t.arg()));
      case TermKind::Unit: {
        const VarName a = fresh();
        return Term::lam(a, Term::var(a));
      }
      case TermKind::True:
      case TermKind::False: {
        const VarName a = fresh();
        const VarName b = fresh();
        return Term::lam(a, Term::lam(b, Term::var(t.is(TermKind::True) ? a : b)));
      }
      case TermKind::Nil: {
        const VarName c = fresh();
        const VarName n = fresh();
        return Term::lam(c, Term::lam(n, Term::var(n)));
      }
      case TermKind::Cons: {
        Term cons = cons_combinator();
        Term h = run(t.head());
        Term tl = run(t.tail());
        return Term::app(Term::app(std::move(cons), std::move(h)), std::move(tl));
      }
      case TermKind::Ite: {
        Term c = run(t.cond());
        Term a = run(t.then_branch());
        Term b = run(t.else_branch());
        return Term::app(Term::app(std::move(c), std::move(a)), std::move(b));
      }
      case TermKind::Foldr: {
        // Encoded in output order l f e so fresh names follow preorder.
        Term l = run(t.list());
        Term f = run(t.step_fn());
        Term e = run(t.init());
        return Term::app(Term::app(std::move(l), std::move(f)), std::move(e));
      }
    }
    return t;
  }

 private:
  VarName fresh() { return VarName{next_++}; }

  // \h -> \t -> \c -> \n -> c h (t c n)
  Term cons_combinator() {
    const VarName h = fresh();
    const VarName tl = fresh();
    const VarName c = fresh();
    const VarName n = fresh();
    const Term vc = Term::var(c);
    const Term vn = Term::var(n);
    const std::array<Term, 2> cn{vc, vn};
    const std::array<Term, 2> args{Term::var(h), Term::apply(Term::var(tl), cn)};
    return Term::lam(h, Term::lam(tl, Term::lam(c, Term::lam(n, Term::apply(vc, args)))));
  }

  std::uint32_t next_;
};

}  // namespace

Term church_encode(const Term& t) {
  Encoder enc(static_cast<std::uint32_t>(t.max_index() + 1));
  Term out = enc.run(t);
  return t.closed() ? rename_vr(out) : out;
}

}  // namespace lc
