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

#include "lc/reduce.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace lc {

std::string_view to_string(Strategy s) { return s == Strategy::WHNF ? "whnf" : "dnf"; }
std::string_view to_string(Renaming r) { return r == Renaming::VR ? "vr" : "nvr"; }

FuelExhausted::FuelExhausted(std::size_t fuel)
    : std::runtime_error("reduction exceeded " + std::to_string(fuel) + " steps"), fuel_(fuel) {}

namespace {

Term with_children(const Term& t, const std::array<Term, 3>& kids) {
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

// Rebuilds t with child i replaced, sharing t when nothing changed.
Term replace_child(const Term& t, std::size_t i, const Term& c) {
  if (t.child(i).same(c)) return t;
  std::array<Term, 3> kids;
  for (std::size_t k = 0; k < t.arity(); ++k) kids[k] = t.child(k);
  kids[i] = c;
  return with_children(t, kids);
}

class Reducer {
 public:
  explicit Reducer(std::size_t fuel) : fuel_(fuel) {}

  std::size_t steps() const { return steps_; }

  Term whnf(Term t) {
    for (;;) {
      switch (t.kind()) {
        case TermKind::App: {
          Term f = whnf(t.fun());
          if (f.is(TermKind::Lam)) {
            tick();
            t = substitute(f.body(), f.name(), t.arg());
            continue;
          }
          return replace_child(t, 0, f);
        }
        case TermKind::Ite: {
          Term c = whnf(t.cond());
          if (c.is(TermKind::True)) {
            tick();
            t = t.then_branch();
            continue;
          }
          if (c.is(TermKind::False)) {
            tick();
            t = t.else_branch();
            continue;
          }
          return replace_child(t, 0, c);
        }
        case TermKind::Foldr: {
          Term l = whnf(t.list());
          if (l.is(TermKind::Nil)) {
            tick();
            t = t.init();
            continue;
          }
          if (l.is(TermKind::Cons)) {
            tick();
            Term rest = Term::foldr(t.step_fn(), t.init(), l.tail());
            t = Term::app(Term::app(t.step_fn(), l.head()), std::move(rest));
            continue;
          }
          return replace_child(t, 2, l);
        }
        default:
          return t;
      }
    }
  }

  Term dnf(const Term& t) {
    Term w = whnf(t);
    if (w.arity() == 0) return w;
    std::array<Term, 3> kids;
    bool changed = false;
    for (std::size_t i = 0; i < w.arity(); ++i) {
      kids[i] = dnf(w.child(i));
      changed = changed || !kids[i].same(w.child(i));
    }
    return changed ? with_children(w, kids) : w;
  }

 private:
  void tick() {
    if (++steps_ > fuel_) throw FuelExhausted(fuel_);
  }

  std::size_t fuel_;
  std::size_t steps_ = 0;
};

class VrRenamer {
 public:
  Term run(const Term& t) {
    switch (t.kind()) {
      case TermKind::Var:
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
          if (it->first == t.name().index) {
            return it->second == t.name().index ? t : Term::var(VarName{it->second});
          }
        }
        return t;
      case TermKind::Lam: {
        const std::uint32_t fresh = next_++;
        scope_.emplace_back(t.name().index, fresh);
        Term body = run(t.body());
        scope_.pop_back();
        if (fresh == t.name().index && body.same(t.body())) return t;
        return Term::lam(VarName{fresh}, std::move(body), t.annotation());
      }
      default: {
        if (t.arity() == 0) return t;
        std::array<Term, 3> kids;
        bool changed = false;
        for (std::size_t i = 0; i < t.arity(); ++i) {
          kids[i] = run(t.child(i));
          changed = changed || !kids[i].same(t.child(i));
        }
        return changed ? with_children(t, kids) : t;
      }
    }
  }

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> scope_;
  std::uint32_t next_ = 0;
};

}  // namespace

Term rename_vr(const Term& t) { return VrRenamer{}.run(t); }

ReductionResult reduce(const Term& t, Strategy strategy, Renaming renaming, std::size_t fuel) {
  Reducer r(fuel);
  Term nf = strategy == Strategy::WHNF ? r.whnf(t) : r.dnf(t);
  if (renaming == Renaming::VR) nf = rename_vr(nf);
  return ReductionResult{std::move(nf), r.steps(), strategy, renaming};
}

}  // namespace lc
